#include <doctest.h>

#include "dnq/coeffq.hpp"
#include "dnq/formulas.hpp"
#include "dnq/oracle.hpp"

using namespace dnq;

namespace {
const VarId A = VarId::a(), B = VarId::b(), C = VarId::c(), D = VarId::d();
const VarId Q0 = VarId::inner(0), Q1 = VarId::inner(1);

DimVec dv(std::initializer_list<std::pair<VarId, int>> init) {
    DimVec d;
    for (auto& [v, x] : init) d.set(v, x);
    return d;
}
LaurentPoly one() { return LaurentPoly::one(); }
LaurentPoly xv(VarId v, int e = 1) { return LaurentPoly::var(v, e); }
}  // namespace

TEST_CASE("reflect_fpoly degenerate cases") {
    QuiverDn q4 = QuiverDn::subspace(4);
    // sigma_q S_q = 0 and F_0 = 1, at the sink
    CHECK(reflect_fpoly(q4, Q0, one() + xv(Q0), DimVec::unit(Q0), true) == one());
    // zero module
    CHECK(reflect_fpoly(q4, Q0, one(), DimVec(), true) == one());
    // guard: an S_q summand elsewhere is rejected
    CHECK_THROWS_AS(reflect_fpoly(q4, Q0, one() + xv(Q0) * 2, DimVec::unit(Q0), true), std::invalid_argument);
}

TEST_CASE("sink then source reflection is the identity") {
    QuiverDn q4 = QuiverDn::subspace(4);
    QuiverDn rq = q4.reflect_quiver(Q0);
    for (const DimVec& alpha : positive_real_roots(q4, 8)) {
        if (alpha == DimVec::unit(Q0)) continue;
        LaurentPoly f = f_root(q4, alpha);
        LaurentPoly there = reflect_fpoly(q4, Q0, f, alpha, true);
        DimVec ralpha = q4.reflect_dim(Q0, alpha);
        LaurentPoly back = reflect_fpoly(rq, Q0, there, ralpha, false);
        CHECK(back == f);
    }
}

TEST_CASE("one-vertex sanity of the generic reflection") {
    // Semisimple of dimension n on the one-point quiver reflects to F_0 = 1.
    VarId v = Q0;
    for (int n = 1; n <= 5; ++n) {
        LaurentPoly f;
        for (int k = 0; k <= n; ++k) f.add_term(Monomial::var(v, k), gen_binomial(n, k));
        DimVec m;
        m.set(v, n);
        CHECK(reflect_fpoly_generic(v, f, m, true, {}, {}) == one());
        if (n == 1) CHECK(reflect_fpoly_generic(v, f, m, false, {}, {}) == one());
    }
}

TEST_CASE("dual F-polynomials") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec sa = DimVec::unit(A);
    CHECK(dual_fpoly(one() + xv(A), sa) == one() + xv(A));
    DimVec t1 = dv({{Q0, 1}, {A, 1}, {C, 1}});
    LaurentPoly ft1 = f_root(q4, t1);
    LaurentPoly dualed = dual_fpoly(ft1, t1);
    CHECK(dualed.constant_term() == 1);
    CHECK(dualed.coefficient(t1.monomial()) == 1);
    CHECK(dual_fpoly(dualed, t1) == ft1);
    CHECK_THROWS_AS(dual_fpoly(one() + xv(A), dv({{B, 1}})), std::invalid_argument);
}

TEST_CASE("reduction of type one") {
    CHECK(reduce_type_one(one(), 0, 5) == one());
    // substitution shape on single variables
    CHECK(reduce_type_one(xv(Q0), 0, 6) == xv(Q0) * (one() + xv(Q1)));
    // lifting F_delta up one rank agrees with the stored closed form
    QuiverDn q5 = QuiverDn::subspace(5);
    CHECK(reduce_type_one(f_delta(QuiverDn::subspace(4)), 0, 5) == f_delta(q5));
    // the mid-chain insertion with variable relabelling gives the same lift
    QuiverDn q6 = QuiverDn::subspace(6);
    CHECK(reduce_type_one(f_delta(q5), 0, 6) == f_delta(q6));
    CHECK(reduce_type_one(f_delta(q5), 1, 6) == f_delta(q6));
}

TEST_CASE("f_delta against an explicit homogeneous representation of D~5") {
    QuiverDn q5 = QuiverDn::subspace(5);
    MatrixRep rep;
    rep.dims = q5.delta();
    auto line = [&](long x, long y) {
        Mat m(2, 1);
        m.at(0, 0) = x;
        m.at(1, 0) = y;
        return m;
    };
    Mat id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    rep.maps[EdgeId::a()] = line(1, 0);
    rep.maps[EdgeId::b()] = line(0, 1);
    rep.maps[EdgeId::c()] = line(1, 1);
    rep.maps[EdgeId::d()] = line(1, 3);
    rep.maps[EdgeId::v(0)] = id2;
    REQUIRE(endomorphism_dimension(q5, rep) == 1);
    CHECK(fpoly_oracle(q5, rep) == f_delta(q5));
}

TEST_CASE("f_delta of D~6 against an explicit representation") {
    QuiverDn q6 = QuiverDn::subspace(6);
    MatrixRep rep;
    rep.dims = q6.delta();
    auto line = [&](long x, long y) {
        Mat m(2, 1);
        m.at(0, 0) = x;
        m.at(1, 0) = y;
        return m;
    };
    Mat id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    rep.maps[EdgeId::a()] = line(1, 0);
    rep.maps[EdgeId::b()] = line(0, 1);
    rep.maps[EdgeId::c()] = line(1, 1);
    rep.maps[EdgeId::d()] = line(1, 3);
    rep.maps[EdgeId::v(0)] = id2;
    rep.maps[EdgeId::v(1)] = id2;
    REQUIRE(endomorphism_dimension(q6, rep) == 1);
    CHECK(fpoly_oracle(q6, rep) == f_delta(q6));
    CHECK(evaluate_ones(f_delta(q6)) == 79);
}

TEST_CASE("rank-2 tube roots of larger diagrams go through the junction lift") {
    QuiverDn q5 = QuiverDn::subspace(5);
    DimVec t = dv({{A, 1}, {Q0, 1}, {Q1, 1}, {C, 1}});  // a rank-2 quasi-simple
    LaurentPoly base = f_small(q5, t);
    CHECK(fpoly_sane(base, t));
    CHECK(evaluate_ones(base) == 7);
    MatrixRep rep = rep_from_root(q5, t);
    CHECK(endomorphism_dimension(q5, rep) == 1);
    CHECK(fpoly_oracle(q5, rep) == base);
    // the product form of the tube layer, literally
    DimVec root = t + q5.delta();
    CHECK(f_root(q5, root) == mul(base, f_delta(q5)));
}

TEST_CASE("f_delta is independent of the tube pairing used to build it") {
    // All three pairings of D~4 give the same F_delta through the glueing.
    Monomial q1m = Monomial::var(Q0) * Monomial::var(A) * Monomial::var(C);
    LaurentPoly v1 = mul(h_block(Q0, A, C), h_block(Q0, B, D)) -
                     LaurentPoly::monomial(q1m, 1) -
                     LaurentPoly::monomial(Monomial::var(Q0) * Monomial::var(B) * Monomial::var(D), 1);
    LaurentPoly v2 = mul(h_block(Q0, A, D), h_block(Q0, B, C)) -
                     LaurentPoly::monomial(Monomial::var(Q0) * Monomial::var(A) * Monomial::var(D), 1) -
                     LaurentPoly::monomial(Monomial::var(Q0) * Monomial::var(B) * Monomial::var(C), 1);
    LaurentPoly v3 = mul(h_block(Q0, A, B), h_block(Q0, C, D)) -
                     LaurentPoly::monomial(Monomial::var(Q0) * Monomial::var(A) * Monomial::var(B), 1) -
                     LaurentPoly::monomial(Monomial::var(Q0) * Monomial::var(C) * Monomial::var(D), 1);
    CHECK(v1 == v2);
    CHECK(v2 == v3);
    CHECK(v1 == f_delta(QuiverDn::subspace(4)));
    CHECK(evaluate_ones(v1) == 23);
}

TEST_CASE("homogeneous recursion seeds") {
    QuiverDn q4 = QuiverDn::subspace(4);
    CHECK(f_homog(q4, 0) == one());
    CHECK(f_homog(q4, 1) == f_delta(q4));
    LaurentPoly expect = mul(f_delta(q4), f_delta(q4)) - LaurentPoly::monomial(q4.delta().monomial(), 1);
    CHECK(f_homog(q4, 2) == expect);
    CHECK(homog_closed_form(q4, 0) == one());
    CHECK(homog_closed_form(q4, 1) == f_delta(q4));
    for (int r = 2; r <= 3; ++r) CHECK(homog_closed_form(q4, r) == f_homog(q4, r));
}

TEST_CASE("tube formulas") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec t1 = dv({{Q0, 1}, {A, 1}, {C, 1}});
    RootInfo info = classify_root(q4, t1 + q4.delta());
    CHECK(f_tube(q4, info) == mul(f_root(q4, t1), f_delta(q4)));

    // the in-tube representation of dimension delta over the same socle
    RootInfo imag = tube_root_info(q4, info.regular->tube_index, info.regular->socle_pos, 0, 1);
    LaurentPoly f = f_tube(q4, imag);
    CHECK(f == f_delta(q4) + LaurentPoly::monomial(t1.monomial(), 1));

    // r = 0 reduces to the base polynomial
    RootInfo base = classify_root(q4, t1);
    CHECK(f_tube(q4, base) == f_root(q4, t1));
}

TEST_CASE("defect -1 branches") {
    QuiverDn q4 = QuiverDn::subspace(4);
    // branch 2 at d_1(1): delta - t is not injective
    DimVec d11 = dv({{Q0, 3}, {A, 2}, {B, 1}, {C, 1}, {D, 1}});
    RootInfo i1 = classify_root(q4, d11);
    CHECK(!i1.preproj->delta_minus_t_injective);
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    DimVec tipa = q4.tau_dim(pa, QuiverDn::TauDir::Inverse);
    LaurentPoly manual = mul(f_root(q4, pa), f_delta(q4)) -
                         mul(f_root(q4, q4.delta() - tipa), one()).shifted(tipa.monomial());
    CHECK(f_defect1(q4, i1) == manual);
    CHECK(f_root(q4, d11) == manual);

    // branch 1 at d_2(2): delta - d_2(1) = s_b is injective
    DimVec d21 = dv({{Q0, 2}, {A, 1}, {C, 1}, {D, 1}});
    RootInfo i2 = classify_root(q4, d21);
    CHECK(i2.preproj->delta_minus_t_injective);
    DimVec d22 = d21 + q4.delta();
    RootInfo i3 = classify_root(q4, d22);
    LaurentPoly manual2 =
        mul(f_root(q4, d21), f_delta(q4)) - LaurentPoly::monomial(q4.delta().monomial(), 1);
    CHECK(f_defect1(q4, i3) == manual2);
    CHECK(f_root(q4, d22) == reflection_chain(q4, d22));
}

TEST_CASE("defect -2 needs the splitting") {
    RootInfo empty;
    empty.kind = RootKind::RealPreprojective;
    empty.defect = -2;
    CHECK_THROWS_AS(f_defect2(QuiverDn::subspace(4), empty), NoSplitting);
}

TEST_CASE("f_root basics") {
    QuiverDn q4 = QuiverDn::subspace(4);
    for (VarId v : q4.vertices()) CHECK(f_root(q4, DimVec::unit(v)) == one() + xv(v));
    CHECK(f_root(q4, q4.delta()) == f_delta(q4));
    CHECK_THROWS_AS(f_root(q4, dv({{A, 3}})), NotARoot);
    // preinjective via duality: the injective at the center for the opposite quiver
    DimVec sa = DimVec::unit(A);
    CHECK(f_root(q4, sa) == one() + xv(A));
}

TEST_CASE("reflection chain on simples and small roots") {
    QuiverDn q4 = QuiverDn::subspace(4);
    CHECK(reflection_chain(q4, DimVec::unit(B)) == one() + xv(B));
    DimVec t1 = dv({{Q0, 1}, {A, 1}, {C, 1}});
    CHECK(reflection_chain(q4, t1) == h_block(Q0, A, C));
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    MatrixRep rep = rep_from_root(q4, pa);
    CHECK(reflection_chain(q4, pa) == fpoly_oracle(q4, rep));
}

TEST_CASE("lifting identity across n = 4 to 5") {
    // (1+x_1) F_{delta - P_b}(x') = F_{delta - P_b}(x) with the type-one maps
    QuiverDn q4 = QuiverDn::subspace(4);
    QuiverDn q5 = QuiverDn::subspace(5);
    DimVec small4 = q4.delta() - dv({{Q0, 1}, {B, 1}});
    DimVec big5 = q5.delta() - dv({{Q0, 1}, {B, 1}});
    LaurentPoly f4 = f_root(q4, small4);
    LaurentPoly f5 = f_root(q5, big5);
    std::map<VarId, RationalFunction> sub{
        {Q0, RationalFunction(xv(Q0) * (one() + xv(Q1)))},
        {C, RationalFunction(xv(C) * xv(Q1), one() + xv(Q1))},
        {D, RationalFunction(xv(D) * xv(Q1), one() + xv(Q1))},
    };
    RationalFunction lifted = substitute(f4, sub) * RationalFunction(one() + xv(Q1));
    CHECK(to_polynomial(lifted) == f5);
}

TEST_CASE("euler table propagation helpers") {
    std::map<int, Int> table{{0, 3}, {1, 2}, {2, 1}};
    CHECK(euler_reflect(table, 5, 2, 0) == 3);
    CHECK(euler_strata(table, 4, 1, 0) == 3);
    std::map<int, Int> zeros{{0, 0}, {1, 0}};
    CHECK(euler_reflect(zeros, 3, 1, 1) == 0);
    CHECK(euler_strata(zeros, 3, 1, 1) == 0);
    CHECK(type_two_identity(2, 1, 1));
    CHECK(!type_two_identity(2, 2, 1));
}

TEST_CASE("cc variable examples") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec sa = DimVec::unit(A);
    LaurentPoly x = cc_variable(q4, sa, euler_table_from_froot(q4, sa));
    CHECK(x == xv(A, -1) * (one() + xv(Q0)));
    CHECK(cc_variable(q4, DimVec(), {{DimVec(), Int(1)}}) == one());
    // working index convention holds, printed one does not
    LaurentPoly f = f_root(q4, sa);
    CHECK(cc_factorized(q4, sa, f, false) == x);
    CHECK(cc_factorized(q4, sa, f, true) != x);
}

TEST_CASE("formula vs chain on the larger diagrams") {
    // The chain covers every root except regular r >= 1 roots of the rank
    // n-2 tube (their seeds live outside this library); those are pinned by
    // the almost-split identity in the structural suite instead.
    struct Case {
        QuiverDn q;
        int height;
    };
    std::vector<Case> cases{{QuiverDn::subspace(5), 9},
                            {QuiverDn::subspace(5).opposite(), 9},
                            {QuiverDn::subspace(6), 11}};
    for (auto& [q, height] : cases) {
        for (const DimVec& alpha : positive_real_roots(q, height)) {
            RootInfo info = classify_root(q, alpha);
            LaurentPoly f = f_root(q, alpha);
            CHECK(fpoly_sane(f, alpha));
            bool chain_covered =
                info.kind != RootKind::RealRegular || info.r == 0 || info.regular->rank == 2;
            if (chain_covered) CHECK(f == reflection_chain(q, alpha));
        }
    }
}

TEST_CASE("cc json output round-trips through the laurent parser") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    LaurentPoly x = cc_variable(q4, pa, euler_table_from_froot(q4, pa));
    CHECK(laurent_from_json(laurent_to_json(x)) == x);
    CHECK(LaurentPoly::parse(x.to_string()) == x);
}

TEST_CASE("memoized layers stay consistent across quivers") {
    QuiverDn q4 = QuiverDn::subspace(4);
    QuiverDn flipped = q4.opposite();
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    // same dimension vector, different orientation: different polynomials
    LaurentPoly f1 = f_root(q4, pa);
    LaurentPoly f2 = f_root(flipped, pa);
    CHECK(f1 != f2);
    CHECK(f1 == f_root(q4, pa));
    CHECK(f2 == f_root(flipped, pa));
}
