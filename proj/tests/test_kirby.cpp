#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>
#include <vector>

#include "ksc/kirby_ledger.hpp"

using ksc::LevineParams;
using ksc::TheoremConstants;

namespace {

LevineParams P(std::vector<long long> c) { return {std::move(c), -1}; }

using Profile = std::tuple<long long, long long, long long>; // disks, bound, theorem

std::set<Profile> profiles_from_tuples(int dmax, long long cmax) {
    std::set<Profile> out;
    for (const auto& params : ksc::parameter_grid(dmax, cmax))
        out.insert({ksc::disks(params), ksc::bound_total(params),
                    ksc::theorem_bound(params)});
    return out;
}

std::set<Profile> profiles_from_classes(int dmax, long long cmax) {
    std::set<Profile> out;
    for (long long d = 1; d <= dmax; ++d)
        for (long long npos = 0; npos <= d; ++npos)
            for (long long nneg = 0; nneg + npos <= d; ++nneg)
                for (long long spos = npos; spos <= cmax * npos; ++spos)
                    for (long long sneg = nneg; sneg <= cmax * nneg; ++sneg) {
                        // realize the class as a concrete tuple
                        std::vector<long long> c;
                        long long rp = spos, rn = sneg;
                        for (long long i = 0; i < npos; ++i) {
                            long long v = std::min(cmax, rp - (npos - 1 - i));
                            c.push_back(v);
                            rp -= v;
                        }
                        for (long long i = 0; i < nneg; ++i) {
                            long long v = std::min(cmax, rn - (nneg - 1 - i));
                            c.push_back(-v);
                            rn -= v;
                        }
                        while (static_cast<long long>(c.size()) < d) c.push_back(0);
                        LevineParams params = P(c);
                        out.insert({ksc::disks(params), ksc::bound_total(params),
                                    ksc::theorem_bound(params)});
                    }
    return out;
}

} // namespace

TEST_CASE("pair_count") {
    CHECK(ksc::pair_count(3) == 5);
    CHECK(ksc::pair_count(-2) == 5);
    CHECK(ksc::pair_count(0) == 0);
    for (long long ck = -9; ck <= 9; ++ck)
        if (ck != 0) CHECK(ksc::pair_count(ck) % 2 == 1);
}

TEST_CASE("dotted_circles") {
    CHECK(ksc::dotted_circles(P({3, 3})) == 15);
    CHECK(ksc::dotted_circles(P({1})) == 4);
    CHECK(ksc::dotted_circles(P({0})) == 3);
}

TEST_CASE("disks and the disk bound") {
    CHECK(ksc::disks(P({3, 3})) == 30);
    CHECK(30 <= 6 * 2 + 4 * 6 + 2);
    CHECK(ksc::disks(P({-1})) == 12);
    CHECK(ksc::disks(P({1})) == 8);

    // bound with equality only when every entry is negative
    for (long long d = 1; d <= 6; ++d)
        for (long long npos = 0; npos <= d; ++npos)
            for (long long nneg = 0; nneg + npos <= d; ++nneg)
                for (long long spos = npos; spos <= 8 * npos; ++spos)
                    for (long long sneg = nneg; sneg <= 8 * nneg; ++sneg) {
                        long long s = spos + sneg;
                        long long p = 2 * s - npos + nneg;
                        long long disks = 4 * d + 2 * p + 2;
                        long long cap = 6 * d + 4 * s + 2;
                        CHECK(disks <= cap);
                        if (disks == cap) {
                            CHECK(npos == 0);
                            CHECK(nneg == d);
                        }
                    }
    CHECK(ksc::disks(P({-1})) == 6 * 1 + 4 * 1 + 2);
    CHECK(ksc::disks(P({-2, -2})) == 6 * 2 + 4 * 4 + 2);
}

TEST_CASE("profile classes reproduce exactly the tuple-level values") {
    CHECK(profiles_from_tuples(2, 3) == profiles_from_classes(2, 3));
}

TEST_CASE("writhe_correction") {
    CHECK(ksc::writhe_correction(P({3, 3})) == 8);
    for (int d = 1; d <= 4; ++d)
        CHECK(ksc::writhe_correction(P(std::vector<long long>(d, 1))) == 0);
    CHECK(ksc::writhe_correction(P({-2})) == -6);
}

TEST_CASE("strands_bound") {
    CHECK(ksc::strands_bound(P({0})) == 72);
    CHECK(ksc::strands_bound(P({3, 3})) == 154);
    CHECK(ksc::strands_bound(P({3, 3})) <= ksc::strands_bound(P({4, 3})));
}

TEST_CASE("crossings_bound") {
    // no writhe-area term when the signed sum matches the band count
    CHECK(ksc::build_ledger(P({1, 1})).stage("writhe oval").crossings == 0);
    CHECK(ksc::crossings_bound(P({1, 1})) == 4 * 8 + 16 * 4 + 20 * 2 + 100);
    // single empty band still pays one unit of writhe area: q = (1-0)^2
    CHECK(ksc::crossings_bound(P({0})) == 4 + 3 + 16 + 100);
    CHECK(ksc::crossings_bound(P({3, 3})) == 364);
}

TEST_CASE("ledger stages and totals") {
    auto ledger = ksc::build_ledger(P({3, 3}));
    CHECK(ledger.disks_total == 30);
    CHECK(ledger.strands_total == 154);
    CHECK(ledger.crossings_total == 364);
    CHECK(ledger.bound_total() == 548);
    CHECK(ledger.to_csv() ==
          "stage,disks,strands,crossings\n"
          "doubled complement,8,8,0\n"
          "doubling 2-handles,0,32,32\n"
          "section handle,0,2,16\n"
          "vanishing cycles,0,48,96\n"
          "twist boxes,20,48,120\n"
          "writhe oval,0,0,48\n"
          "hook stretching,0,8,32\n"
          "1-handle conversion,2,8,20\n"
          "TOTAL,30,154,364\n");

    auto zero = ksc::build_ledger(P({0}));
    CHECK(zero.stage("twist boxes").disks == 0);
    CHECK(zero.stage("twist boxes").strands == 0);
    CHECK(zero.stage("twist boxes").crossings == 0);

    CHECK(ksc::bound_total(P({2, 3})) <= ksc::theorem_bound(P({2, 3})));

    for (const auto& params : ksc::parameter_grid(3, 4)) {
        auto l = ksc::build_ledger(params);
        CHECK(l.disks_total == ksc::disks(params));
        CHECK(l.strands_total == ksc::strands_bound(params));
        CHECK(l.crossings_total == ksc::crossings_bound(params));
        CHECK(l.disks_total % 2 == 0);
        for (const auto& row : l.stages) {
            CHECK(row.disks >= 0);
            CHECK(row.strands >= 0);
            CHECK(row.crossings >= 0);
        }
    }
}

TEST_CASE("theorem_bound") {
    CHECK(ksc::theorem_bound(P({1}), {1, 1, 1}) == 2);
    CHECK(ksc::theorem_bound(P({3, 3})) == 1840);
    CHECK(ksc::theorem_bound(P({3, 3})) >= ksc::bound_total(P({3, 3})));
    CHECK(ksc::theorem_bound(P({-2, -2})) >= ksc::bound_total(P({-2, -2})));
    CHECK_THROWS_AS(ksc::theorem_bound(P({})), ksc::precondition_error);
}

TEST_CASE("constant fitting") {
    TheoremConstants expect{200, 32, 3};
    CHECK(ksc::fit_constants({P({1})}) == expect);
    CHECK(ksc::fit_constants(ksc::parameter_grid(5, 6)) == expect);
    CHECK(ksc::kCertifiedConstants == expect);

    // tight at a single all-negative band
    CHECK(ksc::bound_total(P({-1})) == ksc::theorem_bound(P({-1})));

    // lexicographic minimality: decrementing any component breaks dominance
    CHECK(ksc::dominance_holds_by_profile(expect, 5, 6));
    CHECK_FALSE(ksc::dominance_holds_by_profile({199, 32, 3}, 1, 1));
    CHECK_FALSE(ksc::dominance_holds_by_profile({200, 31, 3}, 1, 1));
    CHECK_FALSE(ksc::dominance_holds_by_profile({200, 32, 2}, 1, 6));

    // cube coefficient of the summed stage polynomials stays within A1
    long long cube = 0;
    for (const auto& stage : ksc::stage_models()) {
        auto it = stage.crossings.find({3, 0, 0, 0});
        if (it != stage.crossings.end()) cube += it->second;
    }
    CHECK(cube == 4);
    CHECK(cube <= expect.A1);
}

TEST_CASE("dominance beyond the fitting grid") {
    CHECK(ksc::dominance_holds_by_profile(ksc::kCertifiedConstants, 8, 12));
}

TEST_CASE("cost model is coefficientwise monotone") {
    for (const auto& stage : ksc::stage_models())
        for (const auto* col : {&stage.disks, &stage.strands, &stage.crossings})
            for (const auto& [exps, coeff] : *col) CHECK(coeff >= 0);
    // raw entry monotonicity is weaker and can fail when growing a positive
    // entry shrinks the writhe gap
    CHECK(ksc::bound_total(P({2, -6, -6, -6, -6})) < ksc::bound_total(P({1, -6, -6, -6, -6})));
}

TEST_CASE("constants serialization") {
    CHECK(ksc::constants_to_json({200, 32, 3}, "d<=5,|c|<=6") ==
          "{\"A1\":200,\"A2\":32,\"A3\":3,\"grid\":\"d<=5,|c|<=6\"}");
}
