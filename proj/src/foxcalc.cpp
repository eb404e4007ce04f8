#include "ksc/foxcalc.hpp"

namespace ksc {

WirtingerPresentation wirtinger(const DiagramCode& code) {
    validate(code);
    WirtingerPresentation pres;
    pres.generator_count = code.narcs;
    for (const Crossing& x : code.crossings) {
        Word w;
        if (x.sign > 0)
            w = {{x.over, 1}, {x.under_in, 1}, {x.over, -1}, {x.under_out, -1}};
        else
            w = {{x.over, -1}, {x.under_in, 1}, {x.over, 1}, {x.under_out, -1}};
        pres.relators.push_back(std::move(w));
    }
    return pres;
}

Word freely_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::vector<Laurent> fox_row(const Word& word, int generator_count) {
    std::vector<Laurent> row(static_cast<size_t>(generator_count));
    int prefix = 0; // abelianized prefix is t^prefix
    for (const Letter& l : freely_reduce(word)) {
        if (l.exp == 1) {
            row[static_cast<size_t>(l.gen)] =
                row[static_cast<size_t>(l.gen)] + Laurent::term(prefix, 1);
            ++prefix;
        } else {
            --prefix;
            row[static_cast<size_t>(l.gen)] =
                row[static_cast<size_t>(l.gen)] - Laurent::term(prefix, 1);
        }
    }
    return row;
}

LaurentMatrix alexander_matrix(const WirtingerPresentation& pres) {
    LaurentMatrix m;
    m.reserve(pres.relators.size());
    for (const Word& w : pres.relators) m.push_back(fox_row(w, pres.generator_count));
    return m;
}

namespace {

Laurent fox_minor_det(const DiagramCode& code, int drop_row, int drop_col) {
    if (code.crossings.empty()) {
        validate(code);
        return Laurent(1);
    }
    WirtingerPresentation pres = wirtinger(code);
    LaurentMatrix full = alexander_matrix(pres);
    const int n = pres.generator_count;
    if (drop_row < 0 || drop_row >= n || drop_col < 0 || drop_col >= n)
        throw precondition_error("deleted row/column out of range");
    LaurentMatrix minor;
    minor.reserve(static_cast<size_t>(n) - 1);
    for (int i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        std::vector<Laurent> row;
        row.reserve(static_cast<size_t>(n) - 1);
        for (int j = 0; j < n; ++j)
            if (j != drop_col) row.push_back(full[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        minor.push_back(std::move(row));
    }
    return det_laurent(minor);
}

} // namespace

Laurent fox_alexander_raw(const DiagramCode& code, int drop_row, int drop_col) {
    return fox_minor_det(code, drop_row, drop_col);
}

Laurent fox_alexander(const DiagramCode& code, int drop_row, int drop_col) {
    Laurent det = fox_minor_det(code, drop_row, drop_col);
    if (det.is_zero())
        throw degenerate_determinant_error(
            "Alexander minor determinant is zero (not a single-component knot diagram?)");
    return canonicalize(det);
}

Laurent seifert_alexander(const std::vector<std::vector<long long>>& V) {
    const size_t n = V.size();
    if (n % 2 != 0) throw invalid_seifert_error("Seifert matrix must have even dimension");
    for (const auto& row : V)
        if (row.size() != n) throw invalid_seifert_error("Seifert matrix must be square");
    if (n == 0) return Laurent(1);

    LaurentMatrix skew(n, std::vector<Laurent>(n)), pencil(n, std::vector<Laurent>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const long long v = V[i][j], w = V[j][i];
            skew[i][j] = Laurent(Int(v - w));
            pencil[i][j] = Laurent(Int(v)) - Laurent::term(1, Int(w));
        }
    Int unim = det_laurent(skew).eval_at_one();
    if (unim != 1 && unim != -1)
        throw invalid_seifert_error("det(V - V^T) must be +-1");
    return canonicalize(det_laurent(pencil));
}

} // namespace ksc
