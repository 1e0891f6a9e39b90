#include <doctest.h>

#include "dnq/laurent.hpp"

using namespace dnq;

namespace {
LaurentPoly xv(VarId v, int e = 1) { return LaurentPoly::var(v, e); }
const VarId A = VarId::a(), B = VarId::b(), C = VarId::c(), D = VarId::d();
const VarId Q0 = VarId::inner(0), Q1 = VarId::inner(1), Q2 = VarId::inner(2);
}  // namespace

TEST_CASE("multiplication basics") {
    LaurentPoly one = LaurentPoly::one();
    LaurentPoly p = one + xv(Q0);
    CHECK(mul(p, one) == p);
    LaurentPoly sq = mul(p, p);
    CHECK(sq.coefficient(Monomial::var(Q0, 0)) == 1);
    CHECK(sq.coefficient(Monomial::var(Q0, 1)) == 2);
    CHECK(sq.coefficient(Monomial::var(Q0, 2)) == 1);
    CHECK(sq.term_count() == 3);
}

TEST_CASE("f_T1 * f_T2 specializes to 25 at ones") {
    // 25-term expansion; independent check by distributing sums of values.
    LaurentPoly t1 = LaurentPoly::one() + xv(Q0) * (LaurentPoly::one() + xv(A)) * (LaurentPoly::one() + xv(C));
    LaurentPoly t2 = LaurentPoly::one() + xv(Q0) * (LaurentPoly::one() + xv(B)) * (LaurentPoly::one() + xv(D));
    LaurentPoly prod = mul(t1, t2);
    CHECK(evaluate_ones(prod) == 25);
    CHECK(evaluate_ones(t1) * evaluate_ones(t2) == 25);
    // 25 summands, but the two x_0 contributions merge
    CHECK(prod.term_count() == 24);
    CHECK(prod.coefficient(Monomial::var(Q0)) == 2);
}

TEST_CASE("substitute examples") {
    // x_q -> 1/x_q
    LaurentPoly p = LaurentPoly::one() + xv(Q0);
    std::map<VarId, RationalFunction> sub{{Q0, RationalFunction(xv(Q0, -1))}};
    RationalFunction r = substitute(p, sub);
    CHECK(to_polynomial(r) == LaurentPoly::one() + xv(Q0, -1));

    // x_0 -> x_0(1+x_1)
    std::map<VarId, RationalFunction> grow{{Q0, RationalFunction(xv(Q0) * (LaurentPoly::one() + xv(Q1)))}};
    CHECK(to_polynomial(substitute(xv(Q0), grow)) == xv(Q0) + xv(Q0) * xv(Q1));

    // x_2 -> x_2 x_1 (1+x_1)^{-1}: a genuine rational function
    std::map<VarId, RationalFunction> shrink{
        {Q2, RationalFunction(xv(Q2) * xv(Q1), LaurentPoly::one() + xv(Q1))}};
    RationalFunction rr = substitute(xv(Q2), shrink);
    CHECK(rr.numerator() == xv(Q2) * xv(Q1));
    CHECK(rr.denominator() == LaurentPoly::one() + xv(Q1));
}

TEST_CASE("to_polynomial exact division and failure probe") {
    LaurentPoly d = LaurentPoly::one() + xv(Q0, -1);
    CHECK(to_polynomial(RationalFunction(d, d)) == LaurentPoly::one());
    CHECK(to_polynomial(RationalFunction(xv(Q0) + LaurentPoly::one(), d)) == xv(Q0));
    CHECK(to_polynomial(RationalFunction(LaurentPoly::zero(), d)) == LaurentPoly::zero());
    CHECK_THROWS_AS(to_polynomial(RationalFunction(xv(Q0) + LaurentPoly::constant(2), d)), NotDivisible);
}

TEST_CASE("round trip through rational embedding") {
    LaurentPoly p = xv(A, -2) * xv(Q0) + LaurentPoly::constant(3) + xv(D, 5) * LaurentPoly::constant(-7);
    CHECK(to_polynomial(RationalFunction(p)) == p);
}

TEST_CASE("gen_binomial") {
    CHECK(gen_binomial(5, 2) == 10);
    CHECK(gen_binomial(-1, 2) == 1);
    CHECK(gen_binomial(-1, 3) == -1);
    CHECK(gen_binomial(7, 0) == 1);
    CHECK(gen_binomial(-3, 0) == 1);
    CHECK(gen_binomial(3, 5) == 0);
}

TEST_CASE("binomial identities hold exhaustively up to 8") {
    // part 1: for 0 <= m <= t <= n
    for (long n = 0; n <= 8; ++n)
        for (long t = 0; t <= n; ++t)
            for (long m = 0; m <= t; ++m) {
                Int lhs = 0;
                for (long r = 0; r <= m; ++r) {
                    Int term = gen_binomial(m, r) * gen_binomial(n - m + r, n - t);
                    lhs += (r % 2 == 0) ? term : -term;
                }
                Int rhs = gen_binomial(n - m, t);
                if (m % 2 == 1) rhs = -rhs;
                CHECK(lhs == rhs);
            }
    // part 2: for m <= n < t, as factorial ratios scaled to integers
    auto fact = [](long k) {
        Int f = 1;
        for (long i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (long t = 1; t <= 8; ++t)
        for (long n = 0; n < t; ++n)
            for (long m = 0; m <= n; ++m) {
                Rat lhs = 0;
                for (long r = 0; r <= m; ++r) {
                    Rat term = Rat(gen_binomial(m, r) * fact(n - m + r), fact(t - m + r));
                    lhs += (r % 2 == 0) ? term : -term;
                }
                Rat rhs = Rat(fact(n - m) * fact(t - n + m - 1), fact(t) * fact(t - n - 1));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("evaluate_ones") {
    CHECK(evaluate_ones(LaurentPoly::one() + xv(Q0)) == 2);
    LaurentPoly ft1 = LaurentPoly::one() + xv(Q0) * (LaurentPoly::one() + xv(A)) * (LaurentPoly::one() + xv(C));
    CHECK(evaluate_ones(ft1) == 5);
    CHECK(evaluate_ones(LaurentPoly::zero()) == 0);
}

TEST_CASE("canonical text render round trips") {
    LaurentPoly p = xv(A, -1) + xv(Q0) * xv(Q1, 2) * LaurentPoly::constant(3) - LaurentPoly::constant(4);
    LaurentPoly back = LaurentPoly::parse(p.to_string());
    CHECK(back == p);
    CHECK(LaurentPoly::parse("0") == LaurentPoly::zero());
    CHECK(LaurentPoly::parse("1 + x_0") == LaurentPoly::one() + xv(Q0));
}

TEST_CASE("json render round trips") {
    LaurentPoly p = xv(C, -2) * xv(B) * LaurentPoly::constant(12) + LaurentPoly::one();
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
}

TEST_CASE("ring axioms on pseudo-random inputs") {
    // small deterministic generator
    unsigned state = 12345;
    auto rnd = [&]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    std::vector<VarId> vars{A, B, Q0, Q1, C, D};
    auto random_poly = [&]() {
        LaurentPoly p;
        int terms = 1 + rnd() % 4;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (int j = 0; j < 2; ++j) m = m * Monomial::var(vars[rnd() % vars.size()], int(rnd() % 5) - 2);
            p.add_term(m, Int(int(rnd() % 9) - 4));
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly p = random_poly(), q = random_poly(), r = random_poly();
        CHECK(mul(p + q, r) == mul(p, r) + mul(q, r));
        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    unsigned state = 999;
    auto rnd = [&]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    std::vector<VarId> vars{A, Q0, Q1};
    auto random_poly = [&](bool nonneg) {
        LaurentPoly p;
        int terms = 1 + rnd() % 3;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (int j = 0; j < 2; ++j) {
                int e = int(rnd() % 3) - (nonneg ? 0 : 1);
                m = m * Monomial::var(vars[rnd() % vars.size()], e);
            }
            p.add_term(m, Int(1 + rnd() % 3));
        }
        return p;
    };
    std::map<VarId, RationalFunction> sub{
        {Q0, RationalFunction(xv(Q0) * (LaurentPoly::one() + xv(Q1)))},
        {Q1, RationalFunction(xv(Q1) * xv(Q0), LaurentPoly::one() + xv(Q0))},
    };
    auto as_poly_pair = [](const RationalFunction& f, const RationalFunction& g) {
        // f == g as rational functions: cross-multiply
        return mul(f.numerator(), g.denominator()) == mul(g.numerator(), f.denominator());
    };
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly p = random_poly(true), q = random_poly(true);
        RationalFunction lhs = substitute(mul(p, q), sub);
        RationalFunction rhs = substitute(p, sub) * substitute(q, sub);
        CHECK(as_poly_pair(lhs, rhs));
    }
}
