#include "ksc/kirby_ledger.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ksc/errors.hpp"

namespace ksc {

namespace {

// Exponent order: d, s, p, q.
constexpr std::array<int, 4> kD1{1, 0, 0, 0};
constexpr std::array<int, 4> kD2{2, 0, 0, 0};
constexpr std::array<int, 4> kD3{3, 0, 0, 0};
constexpr std::array<int, 4> kS{0, 1, 0, 0};
constexpr std::array<int, 4> kP{0, 0, 1, 0};
constexpr std::array<int, 4> kQ{0, 0, 0, 1};
constexpr std::array<int, 4> kOne{0, 0, 0, 0};

struct Derived {
    long long d = 0;
    long long s = 0;
    long long p = 0;
    long long q = 0;
};

Derived derive(const LevineParams& params) {
    Derived out;
    out.d = static_cast<long long>(params.c.size());
    long long signed_sum = 0;
    for (long long ck : params.c) {
        out.s += std::llabs(ck);
        out.p += pair_count(ck);
        signed_sum += ck;
    }
    long long gap = out.d - signed_sum;
    out.q = gap * gap;
    return out;
}

} // namespace

const std::vector<StageModel>& stage_models() {
    // The doubled knot complement carries the 4d band disks and one strand
    // apiece; doubling 2-handles thread O(d) crossings past O(d) strands for
    // each of the 4d handles; the 24 vanishing cycles cost 2 strands and 4
    // crossings each; every 1/2-handle pair in a twist box contributes 2 disks,
    // and the meridians it rides on are charged per unit of twisting; the
    // writhe oval's area is quadratic in the writhe gap; hooks are stretched
    // once per band; converting dotted circles to 1-handles adds the final
    // fixed surcharge.
    static const std::vector<StageModel> kStages = {
        {"doubled complement", {{kD1, 4}}, {{kD1, 4}}, {}},
        {"doubling 2-handles", {}, {{kD2, 8}}, {{kD3, 4}}},
        {"section handle", {}, {{kOne, 2}}, {{kD2, 4}}},
        {"vanishing cycles", {}, {{kOne, 48}}, {{kOne, 96}}},
        {"twist boxes", {{kP, 2}}, {{kS, 8}}, {{kS, 20}}},
        {"writhe oval", {}, {}, {{kQ, 3}}},
        {"hook stretching", {}, {{kD1, 4}}, {{kD2, 8}}},
        {"1-handle conversion", {{kOne, 2}}, {{kD1, 2}, {kOne, 4}}, {{kD2, 4}, {kOne, 4}}},
    };
    return kStages;
}

long long eval_cost(const CostPoly& poly, long long d, long long s, long long p, long long q) {
    auto pw = [](long long base, int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    long long total = 0;
    for (const auto& [exps, coeff] : poly)
        total += coeff * pw(d, exps[0]) * pw(s, exps[1]) * pw(p, exps[2]) * pw(q, exps[3]);
    return total;
}

long long pair_count(long long ck) {
    if (ck > 0) return 2 * ck - 1;
    if (ck < 0) return 2 * (-ck) + 1;
    return 0;
}

long long pair_sum(const LevineParams& params) { return derive(params).p; }

long long dotted_circles(const LevineParams& params) {
    const Derived v = derive(params);
    return 2 * v.d + 1 + v.p;
}

long long disks(const LevineParams& params) { return 2 * dotted_circles(params); }

long long writhe_correction(const LevineParams& params) {
    long long signed_sum = 0;
    for (long long ck : params.c) signed_sum += ck;
    return 2 * signed_sum - 2 * static_cast<long long>(params.c.size());
}

namespace {

long long column_total(const LevineParams& params, CostPoly StageModel::*column) {
    const Derived v = derive(params);
    long long total = 0;
    for (const auto& stage : stage_models())
        total += eval_cost(stage.*column, v.d, v.s, v.p, v.q);
    return total;
}

} // namespace

long long strands_bound(const LevineParams& params) {
    return column_total(params, &StageModel::strands);
}

long long crossings_bound(const LevineParams& params) {
    return column_total(params, &StageModel::crossings);
}

long long bound_total(const LevineParams& params) {
    return column_total(params, &StageModel::disks) + strands_bound(params) +
           crossings_bound(params);
}

ComplexityLedger build_ledger(const LevineParams& params) {
    const Derived v = derive(params);
    ComplexityLedger ledger;
    for (const auto& stage : stage_models()) {
        LedgerStage row;
        row.label = stage.label;
        row.disks = eval_cost(stage.disks, v.d, v.s, v.p, v.q);
        row.strands = eval_cost(stage.strands, v.d, v.s, v.p, v.q);
        row.crossings = eval_cost(stage.crossings, v.d, v.s, v.p, v.q);
        ledger.disks_total += row.disks;
        ledger.strands_total += row.strands;
        ledger.crossings_total += row.crossings;
        ledger.stages.push_back(std::move(row));
    }
    return ledger;
}

const LedgerStage& ComplexityLedger::stage(const std::string& label) const {
    for (const auto& row : stages)
        if (row.label == label) return row;
    throw error("no ledger stage labeled '" + label + "'");
}

std::string ComplexityLedger::to_csv() const {
    std::ostringstream out;
    out << "stage,disks,strands,crossings\n";
    for (const auto& row : stages)
        out << row.label << ',' << row.disks << ',' << row.strands << ',' << row.crossings
            << '\n';
    out << "TOTAL," << disks_total << ',' << strands_total << ',' << crossings_total << '\n';
    return out.str();
}

long long theorem_bound(const LevineParams& params, const TheoremConstants& k) {
    if (params.c.empty()) throw precondition_error("theorem bound needs at least one entry");
    const Derived v = derive(params);
    return k.A1 * v.d * v.d * v.d + k.A2 * v.s + k.A3 * v.q;
}

std::vector<LevineParams> parameter_grid(int dmax, long long cmax) {
    std::vector<LevineParams> grid;
    std::vector<long long> tuple;
    auto recurse = [&](auto&& self, int depth) -> void {
        if (depth > 0) grid.push_back({tuple, -1});
        if (depth == dmax) return;
        for (long long v = -cmax; v <= cmax; ++v) {
            tuple.push_back(v);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    recurse(recurse, 0);
    return grid;
}

TheoremConstants fit_constants(const std::vector<LevineParams>& grid) {
    if (grid.empty()) throw precondition_error("constant fitting needs a nonempty grid");

    // Sum every stage column into one polynomial in (d, s, p, q), then
    // eliminate p via p <= 2s + d (tight when every entry is negative).
    CostPoly total;
    for (const auto& stage : stage_models())
        for (const auto* column : {&stage.disks, &stage.strands, &stage.crossings})
            for (const auto& [exps, coeff] : *column) total[exps] += coeff;

    CostPoly reduced;
    for (const auto& [exps, coeff] : total) {
        if (exps[2] == 0) {
            reduced[exps] += coeff;
            continue;
        }
        if (exps[2] != 1)
            throw error("stage cost model has a superlinear pair-count term");
        std::array<int, 4> in_s = exps, in_d = exps;
        in_s[2] = 0;
        in_s[1] += 1;
        in_d[2] = 0;
        in_d[0] += 1;
        reduced[in_s] += 2 * coeff;
        reduced[in_d] += coeff;
    }

    // The theorem's shape A1*d^3 + A2*s + A3*q absorbs pure powers of d (up to
    // the cube), a linear s term, a linear q term, and the constant; anything
    // else cannot be dominated for all parameters.
    long long coeff_s = 0, coeff_q = 0;
    std::array<long long, 4> coeff_d{0, 0, 0, 0};
    for (const auto& [exps, coeff] : reduced) {
        if (coeff == 0) continue;
        if (exps[1] == 0 && exps[3] == 0 && exps[0] <= 3)
            coeff_d[exps[0]] += coeff;
        else if (exps == std::array<int, 4>{0, 1, 0, 0})
            coeff_s += coeff;
        else if (exps == std::array<int, 4>{0, 0, 0, 1})
            coeff_q += coeff;
        else
            throw error("stage cost model has a term outside the theorem shape");
    }

    TheoremConstants k;
    k.A2 = std::max(coeff_s, 1LL);
    k.A3 = std::max(coeff_q, 1LL);
    // A1 must clear (sum_j coeff_d[j] d^j) / d^3 for every d >= 1; the ratio
    // is decreasing in d, so scanning a prefix and taking the ceiling maximum
    // is exact.  The scan width is asserted wide enough for the tail.
    k.A1 = 1;
    for (long long d = 1; d <= 256; ++d) {
        long long num = 0;
        for (int j = 3; j >= 0; --j) num = num * d + coeff_d[j];
        long long cube = d * d * d;
        k.A1 = std::max(k.A1, (num + cube - 1) / cube);
    }

    for (const auto& params : grid)
        if (bound_total(params) > theorem_bound(params, k))
            throw error("fitted constants fail on the witness grid");
    return k;
}

bool dominance_holds_by_profile(const TheoremConstants& k, int dmax, long long cmax) {
    // bound_total and theorem_bound both factor through
    // (d, s, p, q), which in turn depend only on how many entries are
    // positive/negative and the two absolute subtotals.
    for (long long d = 1; d <= dmax; ++d)
        for (long long npos = 0; npos <= d; ++npos)
            for (long long nneg = 0; nneg + npos <= d; ++nneg)
                for (long long spos = npos; spos <= cmax * npos; ++spos)
                    for (long long sneg = nneg; sneg <= cmax * nneg; ++sneg) {
                        long long s = spos + sneg;
                        long long p = 2 * s - npos + nneg;
                        long long gap = d - (spos - sneg);
                        long long q = gap * gap;
                        long long bound = 0;
                        for (const auto& stage : stage_models())
                            for (const auto* col :
                                 {&stage.disks, &stage.strands, &stage.crossings})
                                bound += eval_cost(*col, d, s, p, q);
                        long long theorem = k.A1 * d * d * d + k.A2 * s + k.A3 * q;
                        if (bound > theorem) return false;
                    }
    return true;
}

std::string constants_to_json(const TheoremConstants& k, const std::string& grid_note) {
    std::ostringstream out;
    out << "{\"A1\":" << k.A1 << ",\"A2\":" << k.A2 << ",\"A3\":" << k.A3 << ",\"grid\":\""
        << grid_note << "\"}";
    return out.str();
}

} // namespace ksc
