#include "dnq/quiver.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace dnq {

std::string DimVec::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& [v, x] : entries_) {
        if (!first) os << ",";
        os << v.name() << ":" << x;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string DimVec::to_json() const {
    nlohmann::json obj = nlohmann::json::object();
    for (auto& [v, x] : entries_) obj[v.name()] = x;
    return obj.dump();
}

DimVec DimVec::from_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    DimVec d;
    for (auto& [name, x] : doc.items()) d.set(VarId::parse(name), x.get<int>());
    return d;
}

EdgeId EdgeId::parse(const std::string& s) {
    if (s == "a") return a();
    if (s == "b") return b();
    if (s == "c") return c();
    if (s == "d") return d();
    if (s.size() >= 2 && s[0] == 'v') {
        try {
            size_t pos = 0;
            int i = std::stoi(s.substr(1), &pos);
            if (pos + 1 == s.size() && i >= 0) return v(i);
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("not an edge name: '" + s + "'");
}

QuiverDn::QuiverDn(int n) : n_(n) {
    if (n < 4) throw std::invalid_argument("D~n needs n >= 4");
    for (EdgeId e : std::vector<EdgeId>{EdgeId::a(), EdgeId::b(), EdgeId::c(), EdgeId::d()})
        orientation_[e] = true;
    for (int i = 0; i + 5 <= n; ++i) orientation_[EdgeId::v(i)] = false;
    rebuild();
}

QuiverDn QuiverDn::subspace(int n) { return QuiverDn(n); }

QuiverDn QuiverDn::from_orientation_string(int n, const std::string& text) {
    QuiverDn q(n);
    if (text.empty()) return q;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("orientation item needs edge:dir, got '" + item + "'");
        EdgeId e = EdgeId::parse(item.substr(0, colon));
        std::string dir = item.substr(colon + 1);
        bool fwd;
        if (dir == "fwd")
            fwd = true;
        else if (dir == "rev")
            fwd = false;
        else
            throw std::invalid_argument("direction must be fwd or rev, got '" + dir + "'");
        q.set_forward(e, fwd);
    }
    return q;
}

std::string QuiverDn::orientation_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, fwd] : orientation_) {
        if (!first) os << ",";
        os << e.name() << ":" << (fwd ? "fwd" : "rev");
        first = false;
    }
    return os.str();
}

std::vector<EdgeId> QuiverDn::edges() const {
    std::vector<EdgeId> out;
    for (auto& [e, fwd] : orientation_) out.push_back(e);
    return out;
}

void QuiverDn::set_forward(EdgeId e, bool fwd) {
    auto it = orientation_.find(e);
    if (it == orientation_.end()) throw std::invalid_argument("edge " + e.name() + " not present for n=" + std::to_string(n_));
    it->second = fwd;
    rebuild();
}

std::pair<VarId, VarId> QuiverDn::endpoints(EdgeId e) const {
    switch (e.kind) {
        case EdgeId::Kind::A: return {VarId::a(), VarId::inner(0)};
        case EdgeId::Kind::B: return {VarId::b(), VarId::inner(0)};
        case EdgeId::Kind::C: return {VarId::c(), VarId::inner(n_ - 4)};
        case EdgeId::Kind::D: return {VarId::d(), VarId::inner(n_ - 4)};
        case EdgeId::Kind::V: return {VarId::inner(e.idx), VarId::inner(e.idx + 1)};
    }
    throw std::logic_error("bad edge");
}

Arrow QuiverDn::arrow(EdgeId e) const {
    auto [first, second] = endpoints(e);
    if (orientation_.at(e)) return {first, second, e};
    return {second, first, e};
}

void QuiverDn::rebuild() {
    vertices_.clear();
    vertices_.push_back(VarId::a());
    vertices_.push_back(VarId::b());
    for (int i = 0; i <= n_ - 4; ++i) vertices_.push_back(VarId::inner(i));
    vertices_.push_back(VarId::c());
    vertices_.push_back(VarId::d());
    arrows_.clear();
    for (auto& [e, fwd] : orientation_) arrows_.push_back(arrow(e));
}

int QuiverDn::arrow_count(VarId p, VarId q) const {
    int k = 0;
    for (auto& ar : arrows_)
        if (ar.source == p && ar.target == q) ++k;
    return k;
}

int QuiverDn::adjacency(VarId p, VarId q) const { return arrow_count(p, q) + arrow_count(q, p); }

std::vector<VarId> QuiverDn::neighbors(VarId q) const {
    std::vector<VarId> out;
    for (VarId v : vertices_)
        if (v != q && adjacency(v, q) > 0) out.push_back(v);
    return out;
}

bool QuiverDn::is_sink(VarId q) const {
    for (auto& ar : arrows_)
        if (ar.source == q) return false;
    return true;
}

bool QuiverDn::is_source(VarId q) const {
    for (auto& ar : arrows_)
        if (ar.target == q) return false;
    return true;
}

Int QuiverDn::euler_form(const DimVec& alpha, const DimVec& beta) const {
    Int s = 0;
    for (VarId v : vertices_) s += Int(alpha.at(v)) * beta.at(v);
    for (auto& ar : arrows_) s -= Int(alpha.at(ar.source)) * beta.at(ar.target);
    return s;
}

DimVec QuiverDn::delta() const {
    DimVec d;
    d.set(VarId::a(), 1);
    d.set(VarId::b(), 1);
    d.set(VarId::c(), 1);
    d.set(VarId::d(), 1);
    for (int i = 0; i <= n_ - 4; ++i) d.set(VarId::inner(i), 2);
    return d;
}

DimVec QuiverDn::reflect_dim(VarId q, const DimVec& alpha) const {
    DimVec r = alpha;
    int s = -alpha.at(q);
    for (VarId p : neighbors(q)) s += adjacency(p, q) * alpha.at(p);
    r.set(q, s);
    return r;
}

QuiverDn QuiverDn::reflect_quiver(VarId q) const {
    QuiverDn r = *this;
    for (auto& [e, fwd] : r.orientation_) {
        auto [first, second] = endpoints(e);
        if (first == q || second == q) fwd = !fwd;
    }
    r.rebuild();
    return r;
}

QuiverDn QuiverDn::opposite() const {
    QuiverDn r = *this;
    for (auto& [e, fwd] : r.orientation_) fwd = !fwd;
    r.rebuild();
    return r;
}

std::vector<VarId> QuiverDn::sink_order() const {
    std::vector<VarId> order;
    QuiverDn cur = *this;
    std::map<VarId, bool> used;
    while (order.size() < vertices_.size()) {
        bool advanced = false;
        for (VarId v : cur.vertices()) {
            if (used[v] || !cur.is_sink(v)) continue;
            order.push_back(v);
            used[v] = true;
            cur = cur.reflect_quiver(v);
            advanced = true;
            break;
        }
        if (!advanced) throw std::logic_error("no admissible sink found (cyclic quiver?)");
    }
    return order;
}

DimVec QuiverDn::tau_dim(const DimVec& alpha, TauDir dir) const {
    std::vector<VarId> order = sink_order();
    if (dir == TauDir::Inverse) std::reverse(order.begin(), order.end());
    DimVec cur = alpha;
    for (VarId q : order) {
        cur = reflect_dim(q, cur);
        if (!cur.nonnegative())
            throw OutOfCategory(std::string(dir == TauDir::Forward ? "tau" : "tau^{-1}") +
                                " undefined: input was " + (dir == TauDir::Forward ? "projective" : "injective"));
    }
    return cur;
}

DimVec QuiverDn::projective_root(VarId q) const {
    // Vertices reachable from q along arrows; on a tree each is hit once.
    DimVec d = DimVec::unit(q);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& ar : arrows_)
            if (d.at(ar.source) > 0 && d.at(ar.target) == 0) {
                d.set(ar.target, 1);
                grew = true;
            }
    }
    return d;
}

DimVec QuiverDn::injective_root(VarId q) const {
    DimVec d = DimVec::unit(q);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& ar : arrows_)
            if (d.at(ar.target) > 0 && d.at(ar.source) == 0) {
                d.set(ar.source, 1);
                grew = true;
            }
    }
    return d;
}

bool QuiverDn::is_projective_root(const DimVec& alpha) const {
    for (VarId q : vertices_)
        if (alpha == projective_root(q)) return true;
    return false;
}

bool QuiverDn::is_injective_root(const DimVec& alpha) const {
    for (VarId q : vertices_)
        if (alpha == injective_root(q)) return true;
    return false;
}

DimVec dimvec_parse_assignments(const std::vector<std::string>& pairs) {
    DimVec d;
    for (auto& item : pairs) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected vertex=value, got '" + item + "'");
        VarId v = VarId::parse(item.substr(0, eq));
        d.set(v, std::stoi(item.substr(eq + 1)));
    }
    return d;
}

}  // namespace dnq
