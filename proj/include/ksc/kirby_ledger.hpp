#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ksc/levine.hpp"

namespace ksc {

struct TheoremConstants {
    long long A1 = 0;
    long long A2 = 0;
    long long A3 = 0;
    bool operator==(const TheoremConstants&) const = default;
};

// Certified over the standard fitting grid (d <= 5, |c_k| <= 6) and proved
// symbolically from the stage cost model; compiled in so the bound is usable
// without rerunning the fit.
inline const TheoremConstants kCertifiedConstants{200, 32, 3};
inline const char* const kCertifiedGridNote = "d<=5,|c|<=6";

struct LedgerStage {
    std::string label;
    long long disks = 0;
    long long strands = 0;
    long long crossings = 0;
};

struct ComplexityLedger {
    std::vector<LedgerStage> stages;
    long long disks_total = 0;
    long long strands_total = 0;
    long long crossings_total = 0;

    long long bound_total() const { return disks_total + strands_total + crossings_total; }
    const LedgerStage& stage(const std::string& label) const;
    std::string to_csv() const;
};

// Cost polynomial in the derived quantities (d, s, p, q) where s = sum |c_k|,
// p = sum pair_count(c_k), q = (d - sum c_k)^2.  Key is the exponent vector.
using CostPoly = std::map<std::array<int, 4>, long long>;

struct StageModel {
    std::string label;
    CostPoly disks;
    CostPoly strands;
    CostPoly crossings;
};

// The eight construction stages in order; single source of truth for both the
// numeric ledger and the symbolic constant fit.
const std::vector<StageModel>& stage_models();

long long eval_cost(const CostPoly& poly, long long d, long long s, long long p, long long q);

long long pair_count(long long ck);
long long pair_sum(const LevineParams& params);
long long dotted_circles(const LevineParams& params);
long long disks(const LevineParams& params);
long long writhe_correction(const LevineParams& params);
long long strands_bound(const LevineParams& params);
long long crossings_bound(const LevineParams& params);
long long bound_total(const LevineParams& params);

ComplexityLedger build_ledger(const LevineParams& params);

// A1*d^3 + A2*sum|c_k| + A3*(d - sum c_k)^2.  Requires d >= 1.
long long theorem_bound(const LevineParams& params,
                        const TheoremConstants& k = kCertifiedConstants);

// All tuples of every length 1..dmax with entries in [-cmax, cmax].
std::vector<LevineParams> parameter_grid(int dmax, long long cmax);

// Smallest constants (lexicographic in A1, A2, A3) whose bound dominates the
// summed stage polynomials for every d >= 1 and every tuple, derived
// symbolically from the cost model; the supplied grid is a witness check.
TheoremConstants fit_constants(const std::vector<LevineParams>& grid);

// Exhaustive dominance check over d <= dmax, |c_k| <= cmax via the profile
// classes (d, #positive, #negative, positive sum, negative sum) that determine
// both bounds, so grids far beyond tuple enumeration stay checkable.
bool dominance_holds_by_profile(const TheoremConstants& k, int dmax, long long cmax);

std::string constants_to_json(const TheoremConstants& k, const std::string& grid_note);

} // namespace ksc
