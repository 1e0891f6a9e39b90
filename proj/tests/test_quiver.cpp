#include <doctest.h>

#include "dnq/quiver.hpp"
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

std::vector<QuiverDn> some_orientations(int n) {
    std::vector<QuiverDn> out{QuiverDn::subspace(n)};
    out.push_back(QuiverDn::subspace(n).opposite());
    QuiverDn mixed = QuiverDn::subspace(n);
    mixed.set_forward(EdgeId::b(), false);
    mixed.set_forward(EdgeId::d(), false);
    out.push_back(mixed);
    return out;
}
}  // namespace

TEST_CASE("euler form basics") {
    for (const QuiverDn& q : some_orientations(4)) {
        DimVec sa = DimVec::unit(A);
        CHECK(q.euler_form(sa, sa) == 1);
        CHECK(q.euler_form(q.delta(), q.delta()) == 0);
    }
    QuiverDn q4 = QuiverDn::subspace(4);
    CHECK(q4.euler_form(q4.delta(), dv({{Q0, 1}, {A, 1}})) == -1);
}

TEST_CASE("delta and defect") {
    QuiverDn q4 = QuiverDn::subspace(4);
    CHECK(q4.delta() == dv({{Q0, 2}, {A, 1}, {B, 1}, {C, 1}, {D, 1}}));
    QuiverDn q5 = QuiverDn::subspace(5);
    CHECK(q5.delta() == dv({{Q0, 2}, {VarId::inner(1), 2}, {A, 1}, {B, 1}, {C, 1}, {D, 1}}));
    for (const QuiverDn& q : some_orientations(5)) CHECK(q.defect(q.delta()) == 0);

    CHECK(q4.defect(dv({{Q0, 1}, {A, 1}})) == -1);
    CHECK(q4.defect(dv({{Q0, 3}, {A, 2}, {B, 1}, {C, 1}, {D, 1}})) == -1);
}

TEST_CASE("reflect_dim") {
    QuiverDn q4 = QuiverDn::subspace(4);
    for (VarId v : q4.vertices()) {
        CHECK(q4.reflect_dim(v, DimVec::unit(v)) == DimVec::unit(v) * -1);
        CHECK(q4.reflect_dim(v, q4.delta()) == q4.delta());
    }
    CHECK(q4.reflect_dim(Q0, DimVec::unit(A)) == dv({{Q0, 1}, {A, 1}}));
    DimVec x = dv({{Q0, 2}, {A, 1}, {C, 1}});
    for (VarId v : q4.vertices()) CHECK(q4.reflect_dim(v, q4.reflect_dim(v, x)) == x);
}

TEST_CASE("sink order") {
    QuiverDn q4 = QuiverDn::subspace(4);
    std::vector<VarId> expect{Q0, A, B, C, D};
    CHECK(q4.sink_order() == expect);
    for (const QuiverDn& q : some_orientations(5)) {
        std::vector<VarId> order = q.sink_order();
        CHECK(order.size() == size_t(q.vertex_count()));
        QuiverDn cur = q;
        for (VarId v : order) {
            CHECK(cur.is_sink(v));
            cur = cur.reflect_quiver(v);
        }
        CHECK(cur == q);
    }
}

TEST_CASE("tau on dimension vectors") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    DimVec tipa = q4.tau_dim(pa, QuiverDn::TauDir::Inverse);
    // delta - tau^{-1}(dim P_a) is the simple root at a
    CHECK(tipa == q4.delta() - DimVec::unit(A));
    CHECK(q4.tau_dim(tipa, QuiverDn::TauDir::Forward) == pa);
    CHECK(q4.tau_dim(q4.delta(), QuiverDn::TauDir::Inverse) == q4.delta());
    CHECK_THROWS_AS(q4.tau_dim(pa, QuiverDn::TauDir::Forward), OutOfCategory);
    CHECK_THROWS_AS(q4.tau_dim(DimVec::unit(A), QuiverDn::TauDir::Inverse), OutOfCategory);
}

TEST_CASE("classify_root examples") {
    QuiverDn q4 = QuiverDn::subspace(4);
    RootInfo im = classify_root(q4, q4.delta());
    CHECK(im.kind == RootKind::ImaginaryMultipleOfDelta);
    CHECK(im.r == 1);

    RootInfo reg = classify_root(q4, dv({{Q0, 1}, {A, 1}, {C, 1}}));
    CHECK(reg.kind == RootKind::RealRegular);
    CHECK(reg.r == 0);
    CHECK(reg.regular->l == 1);
    CHECK(reg.regular->rank == 2);

    RootInfo pp = classify_root(q4, dv({{Q0, 3}, {A, 2}, {B, 1}, {C, 1}, {D, 1}}));
    CHECK(pp.kind == RootKind::RealPreprojective);
    CHECK(pp.defect == -1);
    CHECK(pp.preproj->r == 1);
    CHECK(pp.preproj->t == dv({{Q0, 1}, {A, 1}}));

    CHECK_THROWS_AS(classify_root(q4, dv({{A, 2}})), NotARoot);
}

TEST_CASE("root info reconstructs the input") {
    for (const QuiverDn& q : some_orientations(4))
        for (const DimVec& alpha : positive_real_roots(q, 12))
            CHECK(classify_root(q, alpha).reconstruct(q) == alpha);
    QuiverDn q5 = QuiverDn::subspace(5);
    for (const DimVec& alpha : positive_real_roots(q5, 10))
        CHECK(classify_root(q5, alpha).reconstruct(q5) == alpha);
}

TEST_CASE("defect is preserved by reflections") {
    for (const QuiverDn& q : some_orientations(4))
        for (const DimVec& alpha : positive_real_roots(q, 8))
            for (VarId v : q.vertices()) {
                if (alpha == DimVec::unit(v)) continue;
                if (!q.is_sink(v) && !q.is_source(v)) continue;
                CHECK(q.reflect_quiver(v).defect(q.reflect_dim(v, alpha)) == q.defect(alpha));
            }
}

TEST_CASE("defect partitions the real roots") {
    QuiverDn q4 = QuiverDn::subspace(4);
    for (const DimVec& alpha : positive_real_roots(q4, 15)) {
        RootInfo info = classify_root(q4, alpha);
        Int d = q4.defect(alpha);
        if (d == 0) CHECK(info.kind == RootKind::RealRegular);
        if (d < 0) CHECK(info.kind == RootKind::RealPreprojective);
        if (d > 0) CHECK(info.kind == RootKind::RealPreinjective);
    }
}

TEST_CASE("tau preserves the defect") {
    QuiverDn q4 = QuiverDn::subspace(4);
    for (const DimVec& alpha : positive_real_roots(q4, 10)) {
        if (q4.defect(alpha) >= 0) continue;  // stay inside the preprojectives
        DimVec shifted = q4.tau_dim(alpha, QuiverDn::TauDir::Inverse);
        CHECK(q4.defect(shifted) == q4.defect(alpha));
    }
}

TEST_CASE("tube periodicity") {
    for (int n : {4, 5, 6}) {
        QuiverDn q = QuiverDn::subspace(n);
        auto tubes = exceptional_tubes(q);
        REQUIRE(tubes.size() == 3);
        int big = 0;
        for (auto& t : tubes) {
            DimVec around = t.cycle.front();
            for (int i = 0; i < t.rank(); ++i) around = q.tau_dim(around, QuiverDn::TauDir::Inverse);
            CHECK(around == t.cycle.front());
            if (t.rank() == n - 2) ++big;
            DimVec sum;
            for (auto& s : t.cycle) sum = sum + s;
            CHECK(sum == q.delta());
        }
        CHECK(big >= 1);
    }
}

TEST_CASE("orientation strings and json round trip") {
    QuiverDn q = QuiverDn::from_orientation_string(5, "a:rev,v0:fwd");
    CHECK(!q.forward(EdgeId::a()));
    CHECK(q.forward(EdgeId::v(0)));
    CHECK(q.forward(EdgeId::b()));
    QuiverDn back = QuiverDn::from_orientation_string(5, q.orientation_string());
    CHECK(back == q);
    CHECK_THROWS(QuiverDn::from_orientation_string(4, "a:sideways"));
    CHECK_THROWS(QuiverDn::from_orientation_string(4, "v7:fwd"));

    DimVec d = dv({{A, 1}, {Q0, 1}});
    CHECK(DimVec::from_json(d.to_json()) == d);
    CHECK(DimVec::from_json("{\"a\":1,\"b\":0,\"c\":0,\"d\":0,\"0\":1}") == d);
}

TEST_CASE("hom and ext between preprojectives") {
    QuiverDn q4 = QuiverDn::subspace(4);
    DimVec pa = dv({{Q0, 1}, {A, 1}});
    DimVec tipa = q4.tau_dim(pa, QuiverDn::TauDir::Inverse);
    CHECK(hom_preprojective(q4, pa, pa) == 1);
    CHECK(ext_preprojective(q4, pa, pa) == 0);
    CHECK(hom_preprojective(q4, pa, tipa) == 0);
    CHECK(ext_preprojective(q4, tipa, pa) == 1);
    CHECK(hom_preprojective(q4, tipa, pa) == 0);
}
