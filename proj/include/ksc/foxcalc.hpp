#pragma once

#include <vector>

#include "ksc/diagram.hpp"
#include "ksc/laurent.hpp"

namespace ksc {

// A letter x_gen^{exp} of a free-group word; exp is +1 or -1.
struct Letter {
    int gen;
    int exp;
};
using Word = std::vector<Letter>;

// One generator per arc, one conjugation relator per crossing:
// positive crossing  x_c = x_o x_a x_o^-1, written x_o x_a x_o^-1 x_c^-1;
// negative crossing  x_c = x_o^-1 x_a x_o, written x_o^-1 x_a x_o x_c^-1.
struct WirtingerPresentation {
    int generator_count = 0;
    std::vector<Word> relators;
};

WirtingerPresentation wirtinger(const DiagramCode& code);

// Cancels adjacent inverse pairs until none remain.
Word freely_reduce(const Word& w);

// Abelianized Fox derivatives of one relator: entry j is d(word)/d(x_j)
// with every generator sent to t.
std::vector<Laurent> fox_row(const Word& word, int generator_count);

// Full Alexander matrix (one row per relator).
LaurentMatrix alexander_matrix(const WirtingerPresentation& pres);

// Alexander polynomial: delete row drop_row and column drop_col of the
// Alexander matrix, take the exact determinant, canonicalize.  The choice of
// deleted row/column does not affect the canonical result.  Throws
// degenerate_determinant_error when the minor determinant is zero.
Laurent fox_alexander(const DiagramCode& code, int drop_row = 0, int drop_col = 0);

// Same minor determinant, before canonicalization (debug surface: keeps the
// unit ambiguity, including the overall sign).
Laurent fox_alexander_raw(const DiagramCode& code, int drop_row = 0, int drop_col = 0);

// Second oracle: canonicalize(det(V - t V^T)) for a Seifert matrix V of even
// size (0x0 gives 1).  Throws invalid_seifert_error unless det(V - V^T) = +-1.
Laurent seifert_alexander(const std::vector<std::vector<long long>>& V);

} // namespace ksc
