#include "ksc/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "ksc/errors.hpp"

namespace ksc {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Int binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int compositions_count(long long m, long long p) { return binom(m - 1, p - 1); }

Int tuple_count_lower(long long m, long long d) {
    long long half = d / 2;
    return binom(floordiv(m + d - 4, 2), half) * binom(floordiv(m - d - 4, 2), d - half);
}

Int slice_count_exact(long long m, long long d) {
    if (d < 1 || m < d) return 0;
    Int total = 0;
    // j = number of negative entries; split the absolute sum s into a positive
    // part P and negative part N with P - N = d, then count compositions.
    for (long long j = 0; j <= d - 1; ++j)
        for (long long s = d; s <= m; s += 2) {
            long long P = (s + d) / 2;
            long long N = (s - d) / 2;
            Int pos = (P >= d - j && d - j >= 1) ? compositions_count(P, d - j) : 0;
            Int neg = (j == 0) ? Int(N == 0 ? 1 : 0)
                               : (N >= j ? compositions_count(N, j) : Int(0));
            total += binom(d, j) * pos * neg;
        }
    return total;
}

long long slice_abs_budget(long long n, long long d, const TheoremConstants& k) {
    return floordiv(n - k.A1 * d * d * d, k.A2);
}

Int projected_census_size(long long n, const TheoremConstants& k) {
    Int total = 0;
    for (long long d = 1; k.A1 * d * d * d <= n; ++d)
        total += slice_count_exact(slice_abs_budget(n, d, k), d);
    return total;
}

namespace {

// Can r nonzero integers sum to T with absolute sum at most B?
bool slice_feasible(long long r, long long T, long long B) {
    if (r == 0) return T == 0 && B >= 0;
    long long need = std::max(T < 0 ? -T : T, r);
    if ((need - T) % 2 != 0) ++need;
    return need <= B;
}

void slice_recurse(long long depth, long long d, long long target, long long budget,
                   long long bound_used, const TheoremConstants& k, LevineParams& scratch,
                   const std::function<void(const LevineParams&, long long)>& fn) {
    if (depth == d) {
        fn(scratch, bound_used);
        return;
    }
    long long rest = d - depth - 1;
    long long vmax = budget - rest;
    for (long long v = -vmax; v <= vmax; ++v) {
        if (v == 0) continue;
        long long av = v < 0 ? -v : v;
        if (!slice_feasible(rest, target - v, budget - av)) continue;
        scratch.c[depth] = v;
        slice_recurse(depth + 1, d, target - v, budget - av, bound_used + k.A2 * av, k,
                      scratch, fn);
    }
}

} // namespace

void for_each_census(long long n, const TheoremConstants& k, long long max_records,
                     const std::function<void(const LevineParams&, long long)>& fn) {
    if (n < 0) throw precondition_error("census budget must be nonnegative");
    Int projected = projected_census_size(n, k);
    if (projected > max_records) {
        std::ostringstream msg;
        msg << "enumeration at budget " << n << " would produce " << projected
            << " records, over the cap of " << max_records;
        throw budget_infeasible_error(msg.str());
    }
    for (long long d = 1; k.A1 * d * d * d <= n; ++d) {
        long long m = slice_abs_budget(n, d, k);
        if (m < d) continue;
        LevineParams scratch;
        scratch.central = -1;
        scratch.c.assign(d, 0);
        slice_recurse(0, d, d, m, k.A1 * d * d * d, k, scratch, fn);
    }
}

std::vector<CensusRecord> enumerate_census(long long n, const TheoremConstants& k,
                                           long long max_records) {
    std::vector<CensusRecord> records;
    for_each_census(n, k, max_records, [&](const LevineParams& p, long long bound) {
        records.push_back({p, bound, alexander_closed(p)});
    });
    return records;
}

long long distinct_structure_count(const std::vector<CensusRecord>& records) {
    std::vector<std::string> keys;
    keys.reserve(records.size());
    for (const auto& rec : records) keys.push_back(rec.poly.to_json());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return static_cast<long long>(keys.size());
}

namespace {

// Census polynomials are symmetric, so the nonnegative-exponent half is a
// lossless key: six 21-bit fields (exponents 0..5) split across two words.
std::array<uint64_t, 2> pack_symmetric(const Laurent& poly) {
    constexpr long long kOffset = 1LL << 20;
    if (poly.is_zero()) throw error("census polynomial is zero");
    int hi = poly.hi_exp();
    if (hi > 5) throw budget_infeasible_error("packed census keys support depth at most 5");
    std::array<uint64_t, 2> words{0, 0};
    for (int e = 0; e <= 5; ++e) {
        Int c = poly.coeff(e);
        if (poly.coeff(-e) != c) throw error("census polynomial is not symmetric");
        long long v = c.convert_to<long long>();
        if (v <= -kOffset || v >= kOffset)
            throw budget_infeasible_error("census coefficient outside the packed range");
        uint64_t field = static_cast<uint64_t>(v + kOffset);
        words[e / 3] |= field << (21 * (e % 3));
    }
    return words;
}

} // namespace

CensusStats census_stats(long long n, const TheoremConstants& k, long long max_records) {
    std::vector<std::array<uint64_t, 2>> keys;
    Int projected = projected_census_size(n, k);
    if (projected <= max_records) keys.reserve(projected.convert_to<size_t>());
    CensusStats stats;
    for_each_census(n, k, max_records, [&](const LevineParams& p, long long) {
        keys.push_back(pack_symmetric(alexander_closed(p)));
        ++stats.count;
    });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    stats.distinct = static_cast<long long>(keys.size());
    return stats;
}

long long icbrt(long long x) {
    if (x <= 0) return 0;
    long long r = static_cast<long long>(std::llround(std::cbrt(static_cast<double>(x))));
    auto cube = [](long long v) { return static_cast<__int128>(v) * v * v; };
    while (r > 0 && cube(r) > x) --r;
    while (cube(r + 1) <= x) ++r;
    return r;
}

int optimal_d(long long n, const TheoremConstants& k) {
    long long d = 2 * (icbrt(n > 0 ? n / k.A1 : 0) / 4);
    if (d < 2) {
        std::ostringstream msg;
        msg << "budget " << n << " is too small for the depth choice";
        throw too_small_budget_error(msg.str());
    }
    return static_cast<int>(d);
}

double log_big(const Int& v) {
    if (v <= 0) throw precondition_error("logarithm of a nonpositive value");
    if (v < Int(1) << 900) return std::log(v.convert_to<double>());
    unsigned bits = boost::multiprecision::msb(v);
    unsigned shift = bits - 52;
    double top = Int(v >> shift).convert_to<double>();
    return std::log(top) + shift * std::log(2.0);
}

GrowthChain growth_chain(long long n, const TheoremConstants& k) {
    GrowthChain chain;
    try {
        chain.d_star = optimal_d(n, k);
    } catch (const too_small_budget_error&) {
        return chain;
    }
    long long d = chain.d_star;
    chain.m = floordiv(n - k.A1 * d * d * d, k.A2);
    chain.n2 = floordiv(n, 3 * k.A2);
    chain.k2 = icbrt(n / k.A1) / 5;
    chain.v1 = tuple_count_lower(chain.m, d);
    if (chain.v1 >= 1)
        chain.exponent = log_big(chain.v1) /
                         (std::cbrt(static_cast<double>(n)) * std::log(static_cast<double>(n)));

    long long t1 = floordiv(chain.m + d - 4, 2), b1 = d / 2;
    long long t2 = floordiv(chain.m - d - 4, 2), b2 = d - d / 2;
    if (t1 < 1 || b1 < 1 || t2 < 1 || b2 < 1 || chain.k2 < 1 || chain.n2 < 1 ||
        chain.n2 / chain.k2 < 1 || chain.v1 == 0)
        return chain;

    Int single = binom(chain.n2, chain.k2);
    chain.v2 = single * single;
    chain.v3 = boost::multiprecision::pow(Int(chain.n2 / chain.k2),
                                          static_cast<unsigned>(chain.k2));
    if (chain.v2 == 0) return chain;

    if (chain.v1 < chain.v2) {
        chain.status = ChainStatus::below_threshold;
        chain.failed_step = "two-binomial value below squared binomial";
    } else if (chain.v2 < chain.v3) {
        chain.status = ChainStatus::below_threshold;
        chain.failed_step = "squared binomial below its power floor";
    } else {
        chain.status = ChainStatus::ok;
    }
    return chain;
}

Int growth_lower_bound(long long n, const TheoremConstants& k) {
    GrowthChain chain = growth_chain(n, k);
    if (chain.status == ChainStatus::not_applicable) {
        std::ostringstream msg;
        msg << "growth chain is not applicable at budget " << n;
        throw too_small_budget_error(msg.str());
    }
    return chain.v1;
}

std::pair<Int, Int> martelli_band(long long n) {
    if (n < 0) throw precondition_error("band needs a nonnegative budget");
    Int sq = Int(n) * n;
    return {sq / 4, 5 * sq / 16};
}

BoundReport bound_report(long long n, const TheoremConstants& k, long long max_records) {
    BoundReport r;
    r.n = n;
    auto band = martelli_band(n);
    r.martelli_low = band.first;
    r.martelli_high = band.second;
    try {
        r.d_star = optimal_d(n, k);
    } catch (const too_small_budget_error&) {
    }
    if (r.d_star) {
        long long d = *r.d_star;
        r.lower_bound = tuple_count_lower(floordiv(n - k.A1 * d * d * d, k.A2), d);
        if (*r.lower_bound >= 1)
            r.growth_exponent =
                log_big(*r.lower_bound) /
                (std::cbrt(static_cast<double>(n)) * std::log(static_cast<double>(n)));
    }
    if (projected_census_size(n, k) <= max_records)
        r.exact_count = census_stats(n, k, max_records).count;
    return r;
}

namespace {

std::string format_exponent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

std::string bound_report_csv_header() {
    return "n,d_star,exact_count,lower_bound,growth_exponent,martelli_low,martelli_high";
}

std::string bound_report_csv_row(const BoundReport& r) {
    std::ostringstream out;
    out << r.n << ',';
    if (r.d_star) out << *r.d_star;
    else out << "NA";
    out << ',';
    if (r.exact_count) out << *r.exact_count;
    else out << "NA";
    out << ',';
    if (r.lower_bound) out << *r.lower_bound;
    else out << "NA";
    out << ',';
    if (r.growth_exponent) out << format_exponent(*r.growth_exponent);
    else out << "NA";
    out << ',' << r.martelli_low << ',' << r.martelli_high;
    return out.str();
}

std::string bound_report_json(const BoundReport& r) {
    std::ostringstream out;
    out << "{\"n\":" << r.n << ",\"d_star\":";
    if (r.d_star) out << *r.d_star;
    else out << "null";
    out << ",\"exact_count\":";
    if (r.exact_count) out << *r.exact_count;
    else out << "null";
    out << ",\"lower_bound\":";
    if (r.lower_bound) out << *r.lower_bound;
    else out << "null";
    out << ",\"growth_exponent\":";
    if (r.growth_exponent) out << format_exponent(*r.growth_exponent);
    else out << "null";
    out << ",\"martelli_low\":" << r.martelli_low << ",\"martelli_high\":" << r.martelli_high
        << "}";
    return out.str();
}

} // namespace ksc
