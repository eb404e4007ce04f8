#include "ksc/levine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ksc {

long long LevineParams::sum() const {
    long long s = 0;
    for (long long x : c) s += x;
    return s;
}

long long LevineParams::abs_sum() const {
    long long s = 0;
    for (long long x : c) s += std::llabs(x);
    return s;
}

void validate(const LevineParams& p, bool require_nonzero) {
    if (p.c.empty()) throw precondition_error("parameter tuple must have d >= 1");
    if (p.central != 1 && p.central != -1)
        throw precondition_error("central twist must be +1 or -1");
    if (require_nonzero)
        for (long long x : p.c)
            if (x == 0) throw precondition_error("census tuples require every c_k != 0");
}

long long c_zero(const LevineParams& p) {
    validate(p);
    return p.central - 2 * p.sum();
}

Laurent alexander_closed_raw(const LevineParams& p) {
    validate(p);
    Laurent poly(Int(c_zero(p)));
    for (int k = 1; k <= p.d(); ++k) {
        const long long ck = p.c[static_cast<size_t>(k - 1)];
        if (ck == 0) continue;
        poly = poly + Laurent::term(k, ck) + Laurent::term(-k, ck);
    }
    return poly;
}

Laurent alexander_closed(const LevineParams& p) { return canonicalize(alexander_closed_raw(p)); }

bool distinct_polynomials(const std::vector<LevineParams>& tuples) {
    if (tuples.empty()) return true;
    const int central = tuples.front().central;
    std::set<std::vector<long long>> params;
    for (const LevineParams& p : tuples) {
        validate(p);
        if (p.central != central)
            throw precondition_error("all tuples must share the central twist sign");
        if (p.c.back() == 0)
            throw precondition_error("c_d = 0 drops the degree; coefficient read-off needs c_d != 0");
        params.insert(p.c);
    }
    std::set<std::vector<std::pair<int, Int>>> polys;
    for (const auto& c : params)
        polys.insert(alexander_closed(LevineParams{c, central}).terms());
    return polys.size() == params.size();
}

namespace {

// Transposes the adjacent 2-wire blocks (pos, pos+1) and (pos+2, pos+3).
void swap_block(PlatBuilder& p, int pos, PlatBuilder::Over over) {
    for (int at : {pos + 1, pos, pos + 2, pos + 1}) p.cross(at, over);
}

} // namespace

DiagramCode generate_diagram(const LevineParams& params) {
    validate(params);
    for (long long x : params.c)
        if (std::llabs(x) > 1000000)
            throw precondition_error("diagram generation supports |c_k| <= 10^6");
    const int d = params.d();
    const int nbands = 2 * d; // alternating central band, bridge band

    // Band framings in chain order; windings connect every pair of central
    // bands (1-based band numbers 1, 3, 5, ...).
    std::vector<long long> framing;
    framing.reserve(static_cast<size_t>(nbands));
    for (int k = 0; k < d; ++k) {
        framing.push_back(params.central);
        framing.push_back(params.c[static_cast<size_t>(k)]);
    }

    PlatBuilder p;
    for (int m = 0; m < nbands; ++m) {
        p.cup(4 * m);
        p.cup(4 * m + 1);
    }
    for (int m = 0; m < nbands; ++m) {
        const long long f = framing[static_cast<size_t>(m)];
        if (f != 0) p.twist(4 * m, static_cast<int>(f));
    }
    for (int m = 1; m < nbands; ++m) swap_block(p, 4 * m - 2, PlatBuilder::Over::left);

    // A band's free legs sit at these 2-wire unit positions (1-based):
    // left leg of band 1 is unit 1, left leg of band b>1 is unit 2(b-1);
    // right leg of band b<n is unit 2b+1, right leg of the last band is 2n.
    auto unit_pos = [&](int band, bool left) {
        if (left) return band == 1 ? 1 : 2 * (band - 1);
        return band < nbands ? 2 * band + 1 : 2 * nbands;
    };

    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            const long long w = params.central; // winding between central bands
            const int band_i = 2 * a + 1, band_j = 2 * b + 1;
            const int ua = unit_pos(band_j, true), ub = unit_pos(band_i, false);
            const int lo = std::min(ua, ub), hi = std::max(ua, ub);
            // Bring the far leg next to the near one...
            for (int u = hi - 1; u > lo; --u) swap_block(p, 2 * u - 2, PlatBuilder::Over::left);
            // ...apply |w| full twists between the two legs...
            const auto over = -w > 0 ? PlatBuilder::Over::left : PlatBuilder::Over::right;
            for (long long t = 0; t < std::llabs(w); ++t) {
                swap_block(p, 2 * lo - 2, over);
                swap_block(p, 2 * lo - 2, over);
            }
            // ...and carry it back with the opposite sense so the transport
            // cancels (reversed type-II moves, not repeated ones).
            for (int u = lo + 1; u <= hi - 1; ++u)
                swap_block(p, 2 * u - 2, PlatBuilder::Over::right);
        }
    }

    for (int i = 0; i < 2 * nbands - 1; ++i) p.cap(1);
    p.cap(0);
    return p.finish();
}

std::vector<std::vector<long long>> band_seifert_matrix(const LevineParams& p) {
    validate(p);
    const int d = p.d();
    const size_t n = static_cast<size_t>(2 * d);
    std::vector<std::vector<long long>> V(n, std::vector<long long>(n, 0));
    for (int k = 0; k < d; ++k) {
        V[static_cast<size_t>(2 * k)][static_cast<size_t>(2 * k)] = p.central;
        V[static_cast<size_t>(2 * k + 1)][static_cast<size_t>(2 * k + 1)] =
            p.c[static_cast<size_t>(k)];
    }
    for (size_t i = 0; i + 1 < n; ++i) V[i][i + 1] = 1;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            V[static_cast<size_t>(2 * a)][static_cast<size_t>(2 * b)] = p.central;
            V[static_cast<size_t>(2 * b)][static_cast<size_t>(2 * a)] = p.central;
        }
    return V;
}

std::string params_to_json(const LevineParams& p) {
    std::ostringstream os;
    os << "{\"c\":[";
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) os << ',';
        os << p.c[i];
    }
    os << "],\"central\":" << p.central << '}';
    return os.str();
}

std::vector<long long> parse_c_list(const std::string& text) {
    std::vector<long long> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw parse_error("invalid integer in list: '" + tok + "'");
        }
        if (pos != tok.size()) throw parse_error("invalid integer in list: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("empty parameter list");
    return out;
}

} // namespace ksc
