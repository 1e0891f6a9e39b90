#include <doctest.h>

#include "dnq/coeffq.hpp"
#include <algorithm>

#include "dnq/roots.hpp"

using namespace dnq;

namespace {
const VarId A = VarId::a(), B = VarId::b(), C = VarId::c(), D = VarId::d();
const VarId Q0 = VarId::inner(0);

DimVec dv(std::initializer_list<std::pair<VarId, int>> init) {
    DimVec d;
    for (auto& [v, x] : init) d.set(v, x);
    return d;
}
}  // namespace

TEST_CASE("snake at s=0, n=4 matches the figure") {
    CoeffQuiver g = build_snake(0, 4);
    REQUIRE(g.vertices.size() == 5);
    CHECK(g.full_type() == dv({{Q0, 2}, {A, 1}, {B, 1}, {D, 1}}));
    REQUIRE(g.arrows.size() == 4);
    auto has_arrow = [&](int s, int t, EdgeId e, bool extremal) {
        for (auto& a : g.arrows)
            if (a.source == s && a.target == t && a.edge == e && a.extremal == extremal) return true;
        return false;
    };
    CHECK(has_arrow(0, 1, EdgeId::d(), true));
    CHECK(has_arrow(2, 1, EdgeId::a(), false));
    CHECK(has_arrow(2, 4, EdgeId::a(), true));
    CHECK(has_arrow(3, 4, EdgeId::b(), true));
    REQUIRE(g.ramifications.size() == 1);
    CHECK(g.ramifications[0] == std::array<int, 4>{1, 2, 3, 4});
    CHECK(count_admissible(g) == 14);
}

TEST_CASE("snake vertex counts and ramifications") {
    for (int s : {0, 1, 2})
        for (int n : {4, 5, 6})
            CHECK(build_snake(s, n).vertices.size() == size_t(s * (2 * n - 2) + n + 1));
    CHECK(build_snake(1, 4).ramifications.size() == 2 + 1);  // two a/b blocks, one c/d block
}

TEST_CASE("empty and full subsets are always admissible") {
    for (auto g : {build_snake(1, 4), build_snake(0, 5), build_rank2_chain(3)}) {
        bool saw_empty = false, saw_full = false;
        std::uint64_t full = (std::uint64_t(1) << g.vertices.size()) - 1;
        for_each_admissible(g, [&](std::uint64_t mask, const DimVec&) {
            if (mask == 0) saw_empty = true;
            if (mask == full) saw_full = true;
        });
        CHECK(saw_empty);
        CHECK(saw_full);
    }
}

TEST_CASE("enumeration follows binary counting order") {
    std::vector<std::uint64_t> masks;
    for_each_admissible(build_snake(0, 4), [&](std::uint64_t mask, const DimVec&) { masks.push_back(mask); });
    REQUIRE(masks.size() == 14);
    CHECK(masks.front() == 0);
    CHECK(std::is_sorted(masks.begin(), masks.end()));
}

TEST_CASE("gen_function structure") {
    for (auto g : {build_snake(0, 4), build_snake(1, 5), build_rank2_chain(2)}) {
        LaurentPoly f = gen_function(g);
        CHECK(f.constant_term() == 1);
        CHECK(f.coefficient(g.full_type().monomial()) == 1);
        for (auto& [m, c] : f.terms()) CHECK(c > 0);
    }
}

TEST_CASE("snake recursion equals enumeration") {
    for (int n : {4, 5})
        for (int s : {0, 1})
            CHECK(snake_recursion(s, n) == gen_function(build_snake(s, n)));
}

TEST_CASE("rank-2 chain basics") {
    CoeffQuiver one = build_rank2_chain(1);
    LaurentPoly ft1 = h_block(Q0, A, C);
    CHECK(gen_function(one) == ft1);
    CHECK(build_rank2_chain(2).full_type() == dv({{Q0, 2}, {A, 1}, {B, 1}, {C, 1}, {D, 1}}));

    // f_2 = F_delta + x^{t_1(0)} with F_delta = F_T1 F_T2 - x^{t1} - x^{t2}
    LaurentPoly ft2 = h_block(Q0, B, D);
    Monomial t1 = Monomial::var(Q0) * Monomial::var(A) * Monomial::var(C);
    Monomial t2 = Monomial::var(Q0) * Monomial::var(B) * Monomial::var(D);
    LaurentPoly fdelta = mul(ft1, ft2) - LaurentPoly::monomial(t1, 1) - LaurentPoly::monomial(t2, 1);
    CHECK(gen_function(build_rank2_chain(2)) == fdelta + LaurentPoly::monomial(t1, 1));
}

TEST_CASE("tube recursion equals gluing enumeration") {
    CHECK(tube_recursion_rank2(0) == LaurentPoly::one());
    CHECK(tube_recursion_rank2(1) == h_block(Q0, A, C));
    for (int k = 1; k <= 4; ++k)
        CHECK(tube_recursion_rank2(k) == gen_function(build_rank2_chain(k)));
}

TEST_CASE("tube chain variants and the type matcher") {
    for (int pairing = 0; pairing < 3; ++pairing)
        for (int start = 0; start < 2; ++start)
            for (int k = 1; k <= 3; ++k) {
                CoeffQuiver g = build_tube_chain(pairing, start, k);
                auto match = match_tube_chain_type(g.full_type());
                REQUIRE(match.has_value());
                if (k >= 2) {  // k=1 types collide across pairings sharing an arm
                    CHECK((*match)[2] == k);
                }
                CHECK(build_tube_chain((*match)[0], (*match)[1], (*match)[2]).full_type() == g.full_type());
            }
    CHECK(!match_tube_chain_type(dv({{Q0, 1}})).has_value());
}

TEST_CASE("snake types pin the subspace orientation") {
    for (int n : {4, 5, 6})
        for (int s : {0, 1}) {
            QuiverDn q = QuiverDn::subspace(n);
            RootInfo info = classify_root(q, build_snake(s, n).full_type());
            CHECK(info.kind == RootKind::RealPreprojective);
            CHECK(info.defect == -1);
        }
}

TEST_CASE("the helper matrix identity behind the recursion") {
    // prod_{i=0}^m [[1,0],[1,x_i]] = [[1,0],[F_{m-1}, prod x_i]]
    for (int m = 0; m <= 4; ++m) {
        LaurentPoly a = LaurentPoly::one(), b, c, d = LaurentPoly::one();
        for (int i = 0; i <= m; ++i) {
            LaurentPoly xi = LaurentPoly::var(VarId::inner(i));
            LaurentPoly na = a + b, nb = mul(b, xi);
            LaurentPoly nc = c + d, nd = mul(d, xi);
            a = na; b = nb; c = nc; d = nd;
        }
        LaurentPoly fm1;  // F_{m-1} = sum_{i=-1}^{m-1} prod_{j<=i} x_j
        LaurentPoly run = LaurentPoly::one();
        fm1 += run;
        for (int i = 0; i <= m - 1; ++i) {
            run = mul(run, LaurentPoly::var(VarId::inner(i)));
            fm1 += run;
        }
        LaurentPoly prod = LaurentPoly::one();
        for (int i = 0; i <= m; ++i) prod = mul(prod, LaurentPoly::var(VarId::inner(i)));
        CHECK(a == LaurentPoly::one());
        CHECK(b == LaurentPoly::zero());
        CHECK(c == fm1);
        CHECK(d == prod);
    }
}

TEST_CASE("serialization smoke") {
    CoeffQuiver g = build_snake(0, 4);
    std::string js = g.to_json();
    CHECK(js.find("\"vertices\"") != std::string::npos);
    CHECK(js.find("\"extremal\"") != std::string::npos);
    std::string dot = g.to_graphviz();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);  // the non-extremal arrow
}
