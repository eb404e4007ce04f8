#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksc/kirby_ledger.hpp"
#include "ksc/laurent.hpp"
#include "ksc/levine.hpp"

namespace ksc {

// binom(n, k) with the convention that bad arguments (k < 0 or n < k) give 0.
Int binom(long long n, long long k);

// Positive compositions of m into exactly p parts: binom(m-1, p-1).
Int compositions_count(long long m, long long p);

// Closed-form lower bound for the number of tuples on the counting slice
// (entries nonzero, signed sum = d) with absolute sum at most m:
// binom(floor((m+d-4)/2), floor(d/2)) * binom(floor((m-d-4)/2), d-floor(d/2)).
Int tuple_count_lower(long long m, long long d);

// Exact count of the same slice, by composition counting over the number of
// negative entries and the absolute sum.
Int slice_count_exact(long long m, long long d);

// Largest absolute sum a depth-d slice tuple may have under budget n
// (negative when even the empty slice is over budget).
long long slice_abs_budget(long long n, long long d,
                           const TheoremConstants& k = kCertifiedConstants);

// Total records an enumeration at budget n would produce, summed over depths.
Int projected_census_size(long long n, const TheoremConstants& k = kCertifiedConstants);

inline constexpr long long kDefaultMaxRecords = 10'000'000;

struct CensusRecord {
    LevineParams params;
    long long complexity_bound = 0;
    Laurent poly;
};

// Streams every tuple under budget n on the counting slice, depth ascending
// and entries in lexicographic order.  Throws budget_infeasible_error before
// producing anything when the projected size exceeds max_records.
void for_each_census(long long n, const TheoremConstants& k, long long max_records,
                     const std::function<void(const LevineParams&, long long bound)>& fn);

std::vector<CensusRecord> enumerate_census(long long n,
                                           const TheoremConstants& k = kCertifiedConstants,
                                           long long max_records = kDefaultMaxRecords);

// Number of distinct canonical polynomials among the records (computed from
// the polynomials themselves, never shortcut to the record count).
long long distinct_structure_count(const std::vector<CensusRecord>& records);

struct CensusStats {
    long long count = 0;
    long long distinct = 0;
};

// Streaming count + distinct-polynomial count; memory stays at a fixed-width
// encoding per record instead of a materialized polynomial.
CensusStats census_stats(long long n, const TheoremConstants& k = kCertifiedConstants,
                         long long max_records = kDefaultMaxRecords);

// Exact integer cube root of a nonnegative value.
long long icbrt(long long x);

// The depth that optimizes the growth bound: 2*floor(icbrt(n/A1)/4).
// Throws too_small_budget_error when that value would be < 2.
int optimal_d(long long n, const TheoremConstants& k = kCertifiedConstants);

enum class ChainStatus { ok, not_applicable, below_threshold };

// The three-step bound chain at the optimizing depth:
//   v1 = tuple_count_lower(m, d*)            with m = floor((n - A1 d*^3)/A2)
//   v2 = binom(n/(3 A2), icbrt(n/A1)/5)^2
//   v3 = (n2/k2)^k2                          with n2, k2 the v2 arguments
// status is not_applicable until every argument is positive, below_threshold
// when the arguments are positive but v1 >= v2 >= v3 fails at this n, and ok
// otherwise.  exponent = log(v1) / (n^{1/3} log n).
struct GrowthChain {
    ChainStatus status = ChainStatus::not_applicable;
    int d_star = 0;
    long long m = 0;
    long long n2 = 0;
    long long k2 = 0;
    Int v1, v2, v3;
    double exponent = 0.0;
    std::string failed_step;
};

GrowthChain growth_chain(long long n, const TheoremConstants& k = kCertifiedConstants);

// The usable lower bound v1; throws too_small_budget_error when the chain is
// not applicable at this n.  A below-threshold chain still returns v1 (the
// two-binomial value is valid on its own; the chain status carries the rest).
Int growth_lower_bound(long long n, const TheoremConstants& k = kCertifiedConstants);

double log_big(const Int& v);

// (floor(n^2/4), floor(5 n^2/16)).
std::pair<Int, Int> martelli_band(long long n);

struct BoundReport {
    long long n = 0;
    std::optional<int> d_star;
    std::optional<long long> exact_count;
    std::optional<Int> lower_bound;
    std::optional<double> growth_exponent;
    Int martelli_low;
    Int martelli_high;
};

BoundReport bound_report(long long n, const TheoremConstants& k = kCertifiedConstants,
                         long long max_records = kDefaultMaxRecords);

std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);
std::string bound_report_json(const BoundReport& r);

} // namespace ksc
