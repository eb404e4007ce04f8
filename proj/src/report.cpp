#include "ksc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "ksc/census.hpp"
#include "ksc/foxcalc.hpp"
#include "ksc/kirby_ledger.hpp"
#include "ksc/levine.hpp"

namespace ksc {

namespace {

const DiagramCode kTrefoil{3, {{1, 0, 2, 1}, {2, 1, 0, 1}, {0, 2, 1, 1}}};
const DiagramCode kFigureEight{4, {{3, 1, 0, 1}, {1, 3, 2, 1}, {2, 0, 3, -1}, {0, 2, 1, -1}}};
const DiagramCode kUnknot{1, {}};

std::vector<std::vector<long long>> tuples(int len, long long max_abs, bool with_zero) {
    std::vector<std::vector<long long>> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<std::vector<long long>> next;
        for (const auto& base : out)
            for (long long v = -max_abs; v <= max_abs; ++v) {
                if (v == 0 && !with_zero) continue;
                auto t = base;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::string show(const std::vector<long long>& c, int central) {
    std::ostringstream out;
    out << "c=(";
    for (size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << ") central=" << (central > 0 ? "+1" : "-1");
    return out.str();
}

long long brute_compositions(long long m, long long p) {
    if (p == 0) return m == 0 ? 1 : 0;
    long long total = 0;
    for (long long first = 1; first <= m; ++first)
        total += brute_compositions(m - first, p - 1);
    return total;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

CriterionResult criterion_oracle_grid() {
    CriterionResult r{1, "closed-form vs diagram oracle on the depth-2 grid", true, {}};
    int runs = 0;
    for (int central : {-1, +1})
        for (int d = 1; d <= 2; ++d)
            for (const auto& c : tuples(d, 3, false)) {
                LevineParams p{c, central};
                if (fox_alexander(generate_diagram(p)) != alexander_closed(p)) {
                    r.pass = false;
                    r.details.push_back("mismatch at " + show(c, central));
                }
                ++runs;
            }
    r.details.push_back(std::to_string(runs) + " diagrams checked against the closed form");
    return r;
}

CriterionResult criterion_unit_and_symmetry() {
    CriterionResult r{2, "unit evaluation and palindromic symmetry across the depth-4 grid",
                      true, {}};
    int runs = 0;
    for (int central : {-1, +1})
        for (int d = 1; d <= 4; ++d)
            for (const auto& c : tuples(d, 5, true)) {
                LevineParams p{c, central};
                if (alexander_closed_raw(p).eval_at_one() != central) {
                    r.pass = false;
                    r.details.push_back("unit value off at " + show(c, central));
                }
                Laurent canon = alexander_closed(p);
                if (canon.involute() != canon) {
                    r.pass = false;
                    r.details.push_back("asymmetric at " + show(c, central));
                }
                ++runs;
            }
    r.details.push_back(std::to_string(runs) + " tuples checked");
    return r;
}

CriterionResult criterion_named_knots() {
    CriterionResult r{3, "named-knot oracle values and Seifert agreement", true, {}};
    Laurent trefoil({{1, 1}, {0, -1}, {-1, 1}});
    Laurent fig8({{1, 1}, {0, -3}, {-1, 1}});
    auto expect = [&](const char* label, const Laurent& got, const Laurent& want) {
        if (got != want) {
            r.pass = false;
            r.details.push_back(std::string(label) + ": got " + got.to_json());
        }
    };
    expect("trefoil", fox_alexander(kTrefoil), trefoil);
    expect("figure-eight", fox_alexander(kFigureEight), fig8);
    expect("unknot", fox_alexander(kUnknot), Laurent(1));
    expect("trefoil Seifert", seifert_alexander({{-1, 1}, {0, -1}}), trefoil);
    expect("figure-eight Seifert", seifert_alexander({{-1, 1}, {0, 1}}), fig8);
    r.details.push_back("three knot values plus two Seifert cross-checks");
    return r;
}

CriterionResult criterion_disks() {
    CriterionResult r{4, "disk count formula and its linear bound", true, {}};
    for (const auto& c : tuples(3, 4, true)) {
        LevineParams p{c, -1};
        if (disks(p) != 2 * dotted_circles(p)) {
            r.pass = false;
            r.details.push_back("disk formula off at " + show(c, -1));
        }
    }
    // the bound over d <= 6, |c_k| <= 8, by sign/magnitude profile
    bool equality_seen = false;
    for (long long d = 1; d <= 6; ++d)
        for (long long npos = 0; npos <= d; ++npos)
            for (long long nneg = 0; nneg + npos <= d; ++nneg)
                for (long long spos = npos; spos <= 8 * npos; ++spos)
                    for (long long sneg = nneg; sneg <= 8 * nneg; ++sneg) {
                        long long s = spos + sneg;
                        long long p = 2 * s - npos + nneg;
                        long long dval = 4 * d + 2 * p + 2;
                        long long cap = 6 * d + 4 * s + 2;
                        if (dval > cap) {
                            r.pass = false;
                            r.details.push_back("bound exceeded in a depth-" +
                                                std::to_string(d) + " profile");
                        } else if (dval == cap) {
                            equality_seen = true;
                            if (npos != 0 || nneg != d) {
                                r.pass = false;
                                r.details.push_back("equality outside all-negative profiles");
                            }
                        }
                    }
    if (!equality_seen) {
        r.pass = false;
        r.details.push_back("no all-negative equality witness");
    }
    if (disks({{-1}, -1}) != 6 + 4 + 2) {
        r.pass = false;
        r.details.push_back("single negative band does not attain the bound");
    }
    r.details.push_back("formula on the depth-3 cube; bound on all profiles to depth 6");
    return r;
}

CriterionResult criterion_constants() {
    CriterionResult r{5, "certified constants: symbolic fit and out-of-sample dominance",
                      true, {}};
    try {
        TheoremConstants fitted = fit_constants(parameter_grid(5, 6));
        if (!(fitted == kCertifiedConstants)) {
            r.pass = false;
            std::ostringstream msg;
            msg << "fit returned (" << fitted.A1 << "," << fitted.A2 << "," << fitted.A3
                << ")";
            r.details.push_back(msg.str());
        }
    } catch (const error& e) {
        r.pass = false;
        r.details.push_back(std::string("fit failed: ") + e.what());
    }
    if (!dominance_holds_by_profile(kCertifiedConstants, 8, 12)) {
        r.pass = false;
        r.details.push_back("dominance fails somewhere on the depth-8 grid");
    }
    r.details.push_back("constants (200,32,3); dominance profiled to depth 8, entries to 12");
    return r;
}

CriterionResult criterion_counting_chain() {
    CriterionResult r{6, "composition counts and the closed-form slice lower bound", true, {}};
    for (long long m = 1; m <= 20; ++m)
        for (long long p = 1; p <= m; ++p)
            if (compositions_count(m, p) != brute_compositions(m, p)) {
                r.pass = false;
                r.details.push_back("composition count off at m=" + std::to_string(m) +
                                    ",p=" + std::to_string(p));
            }
    if (!(slice_count_exact(10, 2) == 9 && tuple_count_lower(10, 2) == 8)) {
        r.pass = false;
        r.details.push_back("(m,d)=(10,2) instance off");
    }
    int failures = 0;
    for (long long m = 1; m <= 24; ++m)
        for (long long d = 1; d <= 5; ++d) {
            Int exact = slice_count_exact(m, d);
            Int formula = tuple_count_lower(m, d);
            if (exact < formula) {
                ++failures;
                if (failures <= 5) {
                    std::ostringstream msg;
                    msg << "exact " << exact << " below formula " << formula << " at m=" << m
                        << ",d=" << d;
                    r.details.push_back(msg.str());
                }
            }
        }
    if (failures > 0) {
        r.pass = false;
        r.details.push_back("dominance fails at " + std::to_string(failures) +
                            " of 120 grid points");
    }
    return r;
}

CriterionResult criterion_growth() {
    CriterionResult r{7, "growth chain along the doubling schedule", true, {}};
    double min_exp = 1.0;
    for (int i = 0; i <= 8; ++i) {
        long long n = 32768LL << i;
        GrowthChain chain = growth_chain(n);
        if (chain.status != ChainStatus::ok || chain.v1 < chain.v2 || chain.v2 < chain.v3 ||
            chain.exponent <= 0.0) {
            r.pass = false;
            r.details.push_back("chain not intact at n=" + std::to_string(n) +
                                (chain.failed_step.empty() ? "" : ": " + chain.failed_step));
        }
        min_exp = std::min(min_exp, chain.exponent);
    }
    if (min_exp < 0.03) {
        r.pass = false;
        r.details.push_back("minimum exponent " + fmt6(min_exp) +
                            " under the frozen floor 0.03");
    }
    r.details.push_back("minimum exponent over the schedule: " + fmt6(min_exp));
    return r;
}

CriterionResult criterion_census() {
    CriterionResult r{8, "census integrity at the largest enumerable budget", true, {}};

    long long hi = 1;
    while (projected_census_size(hi) <= kDefaultMaxRecords) hi *= 2;
    long long lo = hi / 2;
    while (lo + 1 < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (projected_census_size(mid) <= kDefaultMaxRecords) lo = mid;
        else hi = mid;
    }
    long long n_star = lo;
    r.details.push_back("largest enumerable budget: " + std::to_string(n_star));

    CensusStats stats = census_stats(n_star);
    {
        std::ostringstream msg;
        msg << "records: " << stats.count << ", distinct polynomials: " << stats.distinct;
        r.details.push_back(msg.str());
    }
    if (stats.count != stats.distinct) {
        r.pass = false;
        r.details.push_back("distinct count disagrees with record count");
    }

    std::vector<long long> probes{0, 232, 400, 1000, 5000};
    std::set<std::vector<long long>> prev;
    long long prev_count = -1;
    for (long long n : probes) {
        auto recs = enumerate_census(n);
        std::set<std::vector<long long>> cur;
        for (const auto& rec : recs) cur.insert(rec.params.c);
        if (static_cast<long long>(recs.size()) < prev_count ||
            !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
            r.pass = false;
            r.details.push_back("monotonicity broken at n=" + std::to_string(n));
        }
        prev = std::move(cur);
        prev_count = static_cast<long long>(recs.size());
    }
    if (stats.count < prev_count) {
        r.pass = false;
        r.details.push_back("count shrank at the largest budget");
    }

    for (long long d = 1; kCertifiedConstants.A1 * d * d * d <= n_star; ++d) {
        long long m = slice_abs_budget(n_star, d);
        Int exact = slice_count_exact(m, d);
        Int formula = tuple_count_lower(m, d);
        if (exact < formula) {
            r.pass = false;
            std::ostringstream msg;
            msg << "slice depth " << d << " (m=" << m << "): exact " << exact
                << " below formula " << formula;
            r.details.push_back(msg.str());
        }
    }
    return r;
}

CriterionResult criterion_band() {
    CriterionResult r{9, "comparison band values", true, {}};
    auto check = [&](long long n, long long lo, long long hi) {
        if (martelli_band(n) != std::pair<Int, Int>{lo, hi}) {
            r.pass = false;
            r.details.push_back("band off at n=" + std::to_string(n));
        }
    };
    check(4, 4, 5);
    check(16, 64, 80);
    check(100, 2500, 3125);
    r.details.push_back("band checked at n=4,16,100");
    return r;
}

std::string probe_artifacts() {
    std::ostringstream out;
    out << alexander_closed({{2, 3}, -1}).to_json() << '\n';
    out << alexander_closed({{1}, +1}).to_json() << '\n';
    out << to_text(generate_diagram({{1}, +1}));
    out << build_ledger({{3, 3}, -1}).to_csv();
    out << constants_to_json(fit_constants(parameter_grid(2, 2)), "d<=2,|c|<=2") << '\n';
    out << bound_report_csv_header() << '\n';
    for (long long n : {0LL, 1000LL, 32768LL})
        out << bound_report_csv_row(bound_report(n)) << '\n';
    for_each_census(5000, kCertifiedConstants, kDefaultMaxRecords,
                    [&](const LevineParams& p, long long bound) {
                        out << p.c.size() << ',';
                        for (size_t i = 0; i < p.c.size(); ++i)
                            out << (i ? ";" : "") << p.c[i];
                        out << ',' << p.central << ',' << bound << ','
                            << alexander_closed(p).to_text() << '\n';
                    });
    return out.str();
}

} // namespace

std::vector<CriterionResult> run_criteria() {
    return {criterion_oracle_grid(), criterion_unit_and_symmetry(), criterion_named_knots(),
            criterion_disks(),       criterion_constants(),         criterion_counting_chain(),
            criterion_growth(),      criterion_census(),            criterion_band()};
}

CriterionResult run_determinism_probe() {
    CriterionResult r{10, "determinism probe: regenerated artifacts are byte-identical", true,
                      {}};
    std::string first = probe_artifacts();
    std::string second = probe_artifacts();
    if (first.empty() || first != second) {
        r.pass = false;
        r.details.push_back("artifact bytes differ between generations");
    }
    r.details.push_back(std::to_string(first.size()) + " bytes regenerated and compared");
    return r;
}

std::string render_report(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ' ' << r.name << '\n';
        for (const auto& line : r.details) out << "    - " << line << '\n';
        if (r.pass) ++passed;
    }
    out << "result: " << passed << '/' << results.size() << " criteria passed\n";
    return out.str();
}

} // namespace ksc
