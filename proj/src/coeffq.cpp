#include "dnq/coeffq.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace dnq {

VarId CoeffQuiver::label_of(int id) const {
    for (auto& v : vertices)
        if (v.id == id) return v.label;
    throw std::out_of_range("no vertex with id " + std::to_string(id));
}

DimVec CoeffQuiver::full_type() const {
    DimVec t;
    for (auto& v : vertices) t.set(v.label, t.at(v.label) + 1);
    return t;
}

DimVec CoeffQuiver::subset_type(std::uint64_t mask) const {
    DimVec t;
    for (auto& v : vertices)
        if (mask >> v.id & 1) t.set(v.label, t.at(v.label) + 1);
    return t;
}

std::string CoeffQuiver::to_json() const {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (auto& v : vertices) doc["vertices"].push_back({{"id", v.id}, {"label", v.label.name()}});
    doc["arrows"] = nlohmann::json::array();
    for (auto& a : arrows)
        doc["arrows"].push_back(
            {{"source", a.source}, {"target", a.target}, {"edge", a.edge.name()}, {"extremal", a.extremal}});
    doc["ramifications"] = nlohmann::json::array();
    for (auto& r : ramifications) doc["ramifications"].push_back({r[0], r[1], r[2], r[3]});
    return doc.dump();
}

std::string CoeffQuiver::to_graphviz() const {
    std::ostringstream os;
    os << "digraph coeffquiver {\n";
    for (auto& v : vertices) os << "  n" << v.id << " [label=\"" << v.id << ":" << v.label.name() << "\"];\n";
    for (auto& a : arrows) {
        os << "  n" << a.source << " -> n" << a.target << " [label=\"" << a.edge.name() << "\"";
        if (!a.extremal) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

CoeffQuiver build_snake(int s, int n) {
    if (n < 4) throw std::invalid_argument("snake needs n >= 4");
    if (s < 0) throw std::invalid_argument("snake needs s >= 0");
    const int t = 2 * n - 2;
    CoeffQuiver g;
    if (static_cast<std::uint64_t>(s) * t + n + 1 > 63) throw std::invalid_argument("snake too large to enumerate");

    auto add_vertex = [&](int id, VarId label) { g.vertices.push_back({id, label}); };
    auto add_arrow = [&](int src, int tgt, EdgeId e, bool extremal) { g.arrows.push_back({src, tgt, e, extremal}); };

    for (int k = 0; k <= s; ++k) {
        const int B = k * t;
        // top row B .. B+n-3 labelled q_d, q_{n-4}, ..., q_0
        add_vertex(B, VarId::d());
        for (int j = 1; j <= n - 3; ++j) add_vertex(B + j, VarId::inner(n - 3 - j));
        if (k == 0) add_arrow(0, 1, EdgeId::d(), true);
        for (int j = 1; j <= n - 4; ++j) add_arrow(B + j, B + j + 1, EdgeId::v(n - 4 - j), true);

        // left ramification around l = B+n-3
        add_vertex(B + n - 2, VarId::a());
        add_vertex(B + n - 1, VarId::b());
        add_vertex(B + n, VarId::inner(0));
        add_arrow(B + n - 2, B + n - 3, EdgeId::a(), false);
        add_arrow(B + n - 2, B + n, EdgeId::a(), true);
        add_arrow(B + n - 1, B + n, EdgeId::b(), true);
        g.ramifications.push_back({B + n - 3, B + n - 2, B + n - 1, B + n});

        if (k == s) break;

        // bottom row B+n .. B+2n-4 labelled q_0 .. q_{n-4}
        for (int i = 1; i <= n - 4; ++i) add_vertex(B + n + i, VarId::inner(i));
        for (int m = n; m <= 2 * n - 5; ++m) add_arrow(B + m + 1, B + m, EdgeId::v(m - n), true);

        // right ramification around l = B+2n-4; its last arrow is the next
        // period's d-arrow
        add_vertex(B + 2 * n - 3, VarId::c());
        add_arrow(B + 2 * n - 3, B + 2 * n - 4, EdgeId::c(), false);
        add_arrow(B + 2 * n - 3, B + 2 * n - 1, EdgeId::c(), true);
        add_arrow(B + 2 * n - 2, B + 2 * n - 1, EdgeId::d(), true);
        g.ramifications.push_back({B + 2 * n - 4, B + 2 * n - 3, B + 2 * n - 2, B + 2 * n - 1});
    }
    return g;
}

namespace {

// The two halves of each arm pairing of D~4.
constexpr std::array<std::array<std::array<EdgeId::Kind, 2>, 2>, 3> kPairings{{
    {{{EdgeId::Kind::A, EdgeId::Kind::C}, {EdgeId::Kind::B, EdgeId::Kind::D}}},
    {{{EdgeId::Kind::A, EdgeId::Kind::D}, {EdgeId::Kind::B, EdgeId::Kind::C}}},
    {{{EdgeId::Kind::A, EdgeId::Kind::B}, {EdgeId::Kind::C, EdgeId::Kind::D}}},
}};

VarId outer_of(EdgeId::Kind k) {
    switch (k) {
        case EdgeId::Kind::A: return VarId::a();
        case EdgeId::Kind::B: return VarId::b();
        case EdgeId::Kind::C: return VarId::c();
        case EdgeId::Kind::D: return VarId::d();
        default: throw std::logic_error("outer edge expected");
    }
}

}  // namespace

CoeffQuiver build_tube_chain(int pairing, int start_half, int k) {
    if (pairing < 0 || pairing > 2 || start_half < 0 || start_half > 1)
        throw std::invalid_argument("pairing in {0,1,2}, start_half in {0,1}");
    if (k < 1) throw std::invalid_argument("chain needs k >= 1");
    if (3 * k > 63) throw std::invalid_argument("chain too large to enumerate");
    CoeffQuiver g;
    int prev_center = -1;
    for (int i = 0; i < k; ++i) {
        auto half = kPairings[pairing][(start_half + i) % 2];
        const EdgeId ex{half[0], 0}, ey{half[1], 0};
        const int xs = 3 * i, ys = xs + 1, center = xs + 2;
        g.vertices.push_back({xs, outer_of(half[0])});
        g.vertices.push_back({ys, outer_of(half[1])});
        g.vertices.push_back({center, VarId::inner(0)});
        g.arrows.push_back({xs, center, ex, true});
        g.arrows.push_back({ys, center, ey, true});
        if (prev_center >= 0) {
            g.arrows.push_back({xs, prev_center, ex, false});
            g.ramifications.push_back({prev_center, xs, ys, center});
        }
        prev_center = center;
    }
    return g;
}

CoeffQuiver build_rank2_chain(int k) { return build_tube_chain(0, 0, k); }

std::optional<std::array<int, 3>> match_tube_chain_type(const DimVec& beta) {
    int total = beta.height();
    if (total < 3 || total % 3 != 0) return std::nullopt;
    int k = total / 3;
    if (3 * k > 63) return std::nullopt;
    for (int pairing = 0; pairing < 3; ++pairing)
        for (int start_half = 0; start_half < 2; ++start_half) {
            DimVec type;
            type.set(VarId::inner(0), k);
            for (int i = 0; i < k; ++i) {
                auto half = kPairings[pairing][(start_half + i) % 2];
                for (auto e : half) {
                    VarId v = outer_of(e);
                    type.set(v, type.at(v) + 1);
                }
            }
            if (type == beta) return std::array<int, 3>{pairing, start_half, k};
        }
    return std::nullopt;
}

void for_each_admissible(const CoeffQuiver& g,
                         const std::function<void(std::uint64_t, const DimVec&)>& fn) {
    const int nv = static_cast<int>(g.size());
    if (nv > 63) throw std::invalid_argument("too many vertices to enumerate");

    // Constraints are checked as soon as the last involved vertex is decided.
    // Vertices are decided from the highest id down, exclusion first, which
    // yields masks in increasing binary-counting order.
    std::vector<std::vector<const CoeffQuiver::CArrow*>> arrows_at(nv);
    std::vector<std::vector<const std::array<int, 4>*>> rams_at(nv);
    for (auto& a : g.arrows)
        if (a.extremal) arrows_at[std::min(a.source, a.target)].push_back(&a);
    for (auto& r : g.ramifications) rams_at[*std::min_element(r.begin(), r.end())].push_back(&r);

    std::uint64_t mask = 0;
    auto ok_at = [&](int v) {
        for (auto* a : arrows_at[v])
            if ((mask >> a->source & 1) && !(mask >> a->target & 1)) return false;
        for (auto* r : rams_at[v])
            if ((mask >> (*r)[1] & 1) && (mask >> (*r)[2] & 1) && !(mask >> (*r)[0] & 1)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v < 0) {
            fn(mask, g.subset_type(mask));
            return;
        }
        if (ok_at(v)) self(self, v - 1);
        mask |= std::uint64_t(1) << v;
        if (ok_at(v)) self(self, v - 1);
        mask &= ~(std::uint64_t(1) << v);
    };
    rec(rec, nv - 1);
}

std::uint64_t count_admissible(const CoeffQuiver& g) {
    std::uint64_t n = 0;
    for_each_admissible(g, [&](std::uint64_t, const DimVec&) { ++n; });
    return n;
}

LaurentPoly gen_function(const CoeffQuiver& g) {
    LaurentPoly p;
    for_each_admissible(g, [&](std::uint64_t, const DimVec& type) { p.add_term(type.monomial(), 1); });
    return p;
}

LaurentPoly h_block(VarId x, VarId y, VarId z) {
    LaurentPoly one = LaurentPoly::one();
    return one + LaurentPoly::var(x) * (one + LaurentPoly::var(y)) * (one + LaurentPoly::var(z));
}

LaurentPoly snake_recursion(int s, int n) {
    if (n < 4 || s < 0) throw std::invalid_argument("snake_recursion needs n >= 4, s >= 0");
    const VarId top = VarId::inner(n - 4);
    const LaurentPoly one = LaurentPoly::one();
    auto x = [](VarId v) { return LaurentPoly::var(v); };

    // F^{n-4} of the previous odd row and the subtrahend of the next even
    // step: F^{n-5} of that row for n >= 5, the previous even F^{n-4} for n=4.
    LaurentPoly odd_top = one;  // seed F_{-1}^{n-4} = 1
    LaurentPoly odd_sub;        // unused at m = 0
    LaurentPoly result;

    for (int m = 0; m <= s; ++m) {
        // even row 2m, walked from column n-4 down to 0
        LaurentPoly even_top =
            m == 0 ? one + x(top) + x(top) * x(VarId::d())
                   : mul(h_block(top, VarId::c(), VarId::d()), odd_top) -
                         mul(mul(x(top), mul(x(VarId::c()), x(VarId::d()))), odd_sub);
        std::vector<LaurentPoly> even(n - 3);
        even[n - 4] = even_top;
        for (int j = n - 5; j >= 0; --j) even[j] = mul(x(VarId::inner(j)), even[j + 1]) + odd_top;

        // odd row 2m+1, walked from column 0 up to n-4
        std::vector<LaurentPoly> odd(n - 3);
        odd[0] = mul(h_block(VarId::inner(0), VarId::a(), VarId::b()), even[0]) -
                 mul(mul(x(VarId::inner(0)), mul(x(VarId::a()), x(VarId::b()))), odd_top);
        if (n >= 5) odd[1] = mul(one + x(VarId::inner(1)), odd[0]) - mul(x(VarId::inner(1)), even[0]);
        for (int j = 2; j <= n - 4; ++j)
            odd[j] = mul(one + x(VarId::inner(j)), odd[j - 1]) - mul(x(VarId::inner(j)), odd[j - 2]);

        result = odd[0];
        odd_top = odd[n - 4];
        odd_sub = n >= 5 ? odd[n - 5] : even_top;
    }
    return result;
}

LaurentPoly tube_recursion_rank2(int k) {
    if (k < 0) throw std::invalid_argument("tube_recursion_rank2 needs k >= 0");
    const LaurentPoly ft1 = h_block(VarId::inner(0), VarId::a(), VarId::c());
    const LaurentPoly ft2 = h_block(VarId::inner(0), VarId::b(), VarId::d());
    const LaurentPoly m1 =
        LaurentPoly::var(VarId::inner(0)) * LaurentPoly::var(VarId::a()) * LaurentPoly::var(VarId::c());
    const LaurentPoly m2 =
        LaurentPoly::var(VarId::inner(0)) * LaurentPoly::var(VarId::b()) * LaurentPoly::var(VarId::d());

    LaurentPoly prev = LaurentPoly::zero();  // f_{-1}
    LaurentPoly cur = LaurentPoly::one();    // f_0
    for (int i = 1; i <= k; ++i) {
        LaurentPoly next = i % 2 == 1 ? mul(ft1, cur) - mul(m1, prev) : mul(ft2, cur) - mul(m2, prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace dnq
