#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksc/laurent.hpp"

using ksc::Int;
using ksc::Laurent;
using ksc::LaurentMatrix;

namespace {

Laurent L(std::initializer_list<std::pair<int, Int>> terms) { return Laurent(terms); }

Laurent random_poly(std::mt19937& rng, int max_span = 3, int max_coeff = 4) {
    std::uniform_int_distribution<int> span_d(0, max_span), lo_d(-3, 3), coeff_d(-max_coeff, max_coeff);
    Laurent p;
    int lo = lo_d(rng), span = span_d(rng);
    for (int e = lo; e <= lo + span; ++e) p = p + Laurent::term(e, coeff_d(rng));
    return p;
}

} // namespace

TEST_CASE("addition") {
    CHECK(L({{1, 1}, {-1, 1}}) + L({{1, -1}}) == L({{-1, 1}}));
    Laurent p = L({{2, 3}, {0, -5}});
    CHECK(Laurent{} + p == p);
    Laurent fig8 = L({{1, 1}, {0, -3}, {-1, 1}});
    CHECK(fig8 + fig8 == L({{1, 2}, {0, -6}, {-1, 2}}));
}

TEST_CASE("multiplication") {
    Laurent p = L({{3, 2}, {-2, 7}});
    CHECK(p * Laurent(1) == p);
    CHECK(L({{1, 1}, {0, -1}}) * L({{-1, 1}, {0, -1}}) == L({{1, -1}, {0, 2}, {-1, -1}}));
    CHECK(Laurent::term(2, 1) * Laurent::term(-2, 1) == Laurent(1));
}

TEST_CASE("eval_at_one") {
    CHECK(L({{1, 1}, {0, -3}, {-1, 1}}).eval_at_one() == -1);
    CHECK(Laurent{}.eval_at_one() == 0);
    CHECK(L({{2, 3}, {1, 2}, {0, -11}, {-1, 2}, {-2, 3}}).eval_at_one() == -1);
}

TEST_CASE("involute") {
    CHECK(L({{2, 1}, {0, 5}}).involute() == L({{-2, 1}, {0, 5}}));
    Laurent sym = L({{1, 1}, {0, -3}, {-1, 1}});
    CHECK(sym.involute() == sym);
    CHECK(L({{1, 2}, {0, -1}}).involute() == L({{-1, 2}, {0, -1}}));
}

TEST_CASE("canonicalize resolves the unit ambiguity") {
    // -t^2 + 3t - 1, as a determinant might produce it
    CHECK(ksc::canonicalize(L({{2, -1}, {1, 3}, {0, -1}})) == L({{1, 1}, {0, -3}, {-1, 1}}));
    CHECK(ksc::canonicalize(Laurent(1)) == Laurent(1));
    Laurent fig8 = L({{1, 1}, {0, -3}, {-1, 1}});
    CHECK(ksc::canonicalize(fig8) == fig8);
    CHECK_THROWS_AS(ksc::canonicalize(Laurent{}), ksc::precondition_error);
}

TEST_CASE("canonicalize is idempotent and unit-orbit invariant") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Laurent p = random_poly(rng);
        if (p.is_zero()) continue;
        Laurent c = ksc::canonicalize(p);
        CHECK(ksc::canonicalize(c) == c);
        for (int k = -5; k <= 5; ++k) {
            CHECK(ksc::canonicalize(p.shifted(k)) == c);
            CHECK(ksc::canonicalize((-p).shifted(k)) == c);
        }
        // Sign rule: highest-exponent coefficient is positive.
        CHECK(c.coeff(c.hi_exp()) > 0);
        // Centering rule: minimum degree is -floor(span/2).
        CHECK(c.lo_exp() == -(c.span() / 2));
    }
}

TEST_CASE("canonical form of a symmetric polynomial is itself symmetric") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent half = random_poly(rng);
        Laurent sym = half + half.involute(); // symmetric by construction
        if (sym.is_zero()) continue;
        Laurent c = ksc::canonicalize(sym);
        CHECK(c.involute() == c);
    }
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q).eval_at_one() == p.eval_at_one() * q.eval_at_one());
    }
}

TEST_CASE("exact division") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent p = random_poly(rng), q = random_poly(rng);
        if (q.is_zero()) continue;
        CHECK(Laurent::divide_exact(p * q, q) == p);
    }
    CHECK_THROWS_AS(Laurent::divide_exact(L({{1, 1}, {0, 1}}), L({{0, 2}})), ksc::precondition_error);
}

TEST_CASE("determinant examples") {
    Laurent tm1 = L({{1, 1}, {0, -1}});
    CHECK(ksc::det_laurent({{tm1}}) == tm1);

    LaurentMatrix eye3(3, std::vector<Laurent>(3));
    for (int i = 0; i < 3; ++i) eye3[i][i] = Laurent(1);
    CHECK(ksc::det_laurent(eye3) == Laurent(1));

    LaurentMatrix singular = {{Laurent::term(1, 1), Laurent(1)},
                              {Laurent(1), Laurent::term(-1, 1)}};
    CHECK(ksc::det_laurent(singular).is_zero());
}

TEST_CASE("cofactor and fraction-free elimination agree") {
    std::mt19937 rng(31337);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            LaurentMatrix m(static_cast<size_t>(n), std::vector<Laurent>(static_cast<size_t>(n)));
            for (auto& row : m)
                for (auto& e : row) e = random_poly(rng, 2, 3);
            CHECK(ksc::det_laurent_cofactor(m) == ksc::det_laurent_bareiss(m));
        }
    }
    CHECK(ksc::det_laurent_cofactor({}) == Laurent(1));
    CHECK(ksc::det_laurent_bareiss({}) == Laurent(1));
}

TEST_CASE("json serialization with ascending numeric keys") {
    CHECK(L({{0, -3}, {1, 1}, {-1, 1}}).to_json() == "{\"-1\":1,\"0\":-3,\"1\":1}");
    CHECK(Laurent{}.to_json() == "{}");
    // gap exponents are omitted, not emitted as zero
    CHECK(L({{2, 1}, {-2, 1}, {0, -5}}).to_json() == "{\"-2\":1,\"0\":-5,\"2\":1}");
}

TEST_CASE("text rendering") {
    CHECK(L({{1, 1}, {0, -3}, {-1, 1}}).to_text() == "t^-1 - 3 + t");
    CHECK(Laurent{}.to_text() == "0");
    CHECK(L({{0, -11}, {1, 2}, {2, 3}, {-1, 2}, {-2, 3}}).to_text() ==
          "3*t^-2 + 2*t^-1 - 11 + 2*t + 3*t^2");
}
