#pragma once

#include <string>
#include <vector>

#include "ksc/diagram.hpp"
#include "ksc/laurent.hpp"

namespace ksc {

// Parameter tuple (c_1,...,c_d) plus the sign of the central twist box.
struct LevineParams {
    std::vector<long long> c;
    int central = -1; // -1 or +1

    int d() const { return static_cast<int>(c.size()); }
    long long sum() const;
    long long abs_sum() const;
};

// Throws precondition_error unless d >= 1 and central is +-1;
// with require_nonzero also rejects any c_k = 0 (the census slice rule).
void validate(const LevineParams& p, bool require_nonzero = false);

// c_0 = central - 2 * sum(c_k).
long long c_zero(const LevineParams& p);

// c_0 + sum c_k (t^k + t^-k), before canonicalization (evaluates to
// `central` at t = 1).
Laurent alexander_closed_raw(const LevineParams& p);

// Canonical form of the closed-form Alexander polynomial.
Laurent alexander_closed(const LevineParams& p);

// True iff the canonical Alexander polynomials of the given tuples are
// pairwise distinct (duplicated tuples are collapsed first).  Requires all
// tuples to share the central sign and to have c_d != 0; throws
// precondition_error otherwise.
bool distinct_polynomials(const std::vector<LevineParams>& tuples);

// Explicit planar diagram realizing the parameters, built as a plat of 2d
// ribbon bands: alternating band framings (central, c_1, central, c_2, ...),
// neighbor chain couplings, and one full twist between single legs of every
// pair of central bands.  Contract: fox_alexander of the result equals
// alexander_closed(p).
DiagramCode generate_diagram(const LevineParams& p);

// Linking form of the band surface underlying generate_diagram, in chain
// order: diagonal (central, c_1, central, c_2, ...), superdiagonal 1s, and a
// symmetric `central` entry between every pair of central bands.  Satisfies
// seifert_alexander(band_seifert_matrix(p)) = alexander_closed(p); used to
// triangulate the two polynomial routes with a third.
std::vector<std::vector<long long>> band_seifert_matrix(const LevineParams& p);

// {"c":[...],"central":-1}
std::string params_to_json(const LevineParams& p);

// Comma-separated integers, e.g. "2,3" or "-1,4,0".
std::vector<long long> parse_c_list(const std::string& text);

} // namespace ksc
