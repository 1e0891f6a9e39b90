#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnq/errors.hpp"
#include "dnq/laurent.hpp"
#include "dnq/varid.hpp"

namespace dnq {

// Integer vector indexed by the vertices of D~n.  Sparse: absent entries
// are zero, so vectors for different n interoperate where that makes sense.
class DimVec {
public:
    DimVec() = default;

    static DimVec unit(VarId v) {
        DimVec d;
        d.set(v, 1);
        return d;
    }

    int at(VarId v) const {
        auto it = entries_.find(v);
        return it == entries_.end() ? 0 : it->second;
    }
    void set(VarId v, int value) {
        if (value == 0)
            entries_.erase(v);
        else
            entries_[v] = value;
    }
    const std::map<VarId, int>& entries() const { return entries_; }

    DimVec operator+(const DimVec& o) const {
        DimVec r = *this;
        for (auto& [v, x] : o.entries_) r.set(v, r.at(v) + x);
        return r;
    }
    DimVec operator-(const DimVec& o) const {
        DimVec r = *this;
        for (auto& [v, x] : o.entries_) r.set(v, r.at(v) - x);
        return r;
    }
    DimVec operator*(int k) const {
        DimVec r;
        if (k != 0)
            for (auto& [v, x] : entries_) r.entries_.emplace(v, x * k);
        return r;
    }

    bool is_zero() const { return entries_.empty(); }
    bool nonnegative() const {
        for (auto& [v, x] : entries_)
            if (x < 0) return false;
        return true;
    }
    // Componentwise *this <= o.
    bool leq(const DimVec& o) const { return (o - *this).nonnegative(); }

    int height() const {
        int h = 0;
        for (auto& [v, x] : entries_) h += x;
        return h;
    }

    Monomial monomial() const {
        Monomial m;
        for (auto& [v, x] : entries_) m = m * Monomial::var(v, x);
        return m;
    }

    friend bool operator==(const DimVec& x, const DimVec& y) { return x.entries_ == y.entries_; }
    friend bool operator<(const DimVec& x, const DimVec& y) { return x.entries_ < y.entries_; }

    std::string to_string() const;
    std::string to_json() const;
    static DimVec from_json(const std::string& text);

private:
    std::map<VarId, int> entries_;
};

// Edges of the D~n diagram.  Canonical endpoints:
//   a:(q_a,q_0)  b:(q_b,q_0)  c:(q_c,q_{n-4})  d:(q_d,q_{n-4})  v_i:(q_i,q_{i+1})
// An orientation assigns each edge fwd (first -> second) or rev.
struct EdgeId {
    enum class Kind : std::uint8_t { A, B, C, D, V } kind;
    int idx = 0;  // chain index for V edges

    static EdgeId a() { return {Kind::A, 0}; }
    static EdgeId b() { return {Kind::B, 0}; }
    static EdgeId c() { return {Kind::C, 0}; }
    static EdgeId d() { return {Kind::D, 0}; }
    static EdgeId v(int i) { return {Kind::V, i}; }

    friend auto operator<=>(const EdgeId& x, const EdgeId& y) = default;

    std::string name() const {
        switch (kind) {
            case Kind::A: return "a";
            case Kind::B: return "b";
            case Kind::C: return "c";
            case Kind::D: return "d";
            case Kind::V: return "v" + std::to_string(idx);
        }
        return "?";
    }
    static EdgeId parse(const std::string& s);
};

struct Arrow {
    VarId source;
    VarId target;
    EdgeId edge;
};

// The affine D~n diagram (n >= 4) with an orientation of each edge.
// For n = 4 the edges c and d attach to q_0 and there are no chain edges.
class QuiverDn {
public:
    explicit QuiverDn(int n);

    // All four outer edges directed outer -> inner, chain edges directed
    // q_{i+1} -> q_i.  Validated downstream: the snake types classify as
    // preprojective of defect -1 with this choice.
    static QuiverDn subspace(int n);

    // Orientation string "a:fwd,b:rev,v0:fwd,..."; omitted edges keep the
    // subspace orientation.
    static QuiverDn from_orientation_string(int n, const std::string& text);
    std::string orientation_string() const;

    int n() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    VarId junction() const { return VarId::inner(n_ - 4); }  // where c, d attach

    const std::vector<VarId>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::vector<EdgeId> edges() const;

    bool forward(EdgeId e) const { return orientation_.at(e); }
    void set_forward(EdgeId e, bool fwd);
    std::pair<VarId, VarId> endpoints(EdgeId e) const;  // canonical (first, second)
    Arrow arrow(EdgeId e) const;

    // Number of arrows p -> q (0 or 1 on a D~n diagram).
    int arrow_count(VarId p, VarId q) const;
    // Symmetric adjacency a(p,q) = a(q,p): number of edges between p and q.
    int adjacency(VarId p, VarId q) const;
    std::vector<VarId> neighbors(VarId q) const;

    bool is_sink(VarId q) const;
    bool is_source(VarId q) const;

    // <alpha, beta> = sum alpha_q beta_q - sum over arrows p->q of alpha_p beta_q.
    Int euler_form(const DimVec& alpha, const DimVec& beta) const;
    // Tits form q(alpha) = <alpha, alpha>.
    Int tits_form(const DimVec& alpha) const { return euler_form(alpha, alpha); }

    DimVec delta() const;
    Int defect(const DimVec& alpha) const { return euler_form(delta(), alpha); }

    // Simple reflection on dimension vectors at q (defined for every q).
    DimVec reflect_dim(VarId q, const DimVec& alpha) const;
    // Quiver with all edges at q flipped; meaningful when q is a sink or source.
    QuiverDn reflect_quiver(VarId q) const;
    QuiverDn opposite() const;

    // Admissible sink ordering: v_i is a sink of sigma_{v_{i-1}}...sigma_{v_1}Q.
    // Smallest vertex in canonical order among current unused sinks first.
    std::vector<VarId> sink_order() const;

    enum class TauDir { Forward, Inverse };
    // Coxeter transform on dimension vectors: reflect along sink_order
    // (Forward) or the reversed order at sources (Inverse).  Throws
    // OutOfCategory when the input was projective resp. injective.
    DimVec tau_dim(const DimVec& alpha, TauDir dir) const;

    DimVec projective_root(VarId q) const;  // dim P_q: vertices reachable from q
    DimVec injective_root(VarId q) const;   // dim I_q: vertices that reach q
    bool is_projective_root(const DimVec& alpha) const;
    bool is_injective_root(const DimVec& alpha) const;

    // Stable total key for memo tables.
    std::string key() const { return std::to_string(n_) + "|" + orientation_string(); }

    friend bool operator==(const QuiverDn& x, const QuiverDn& y) {
        return x.n_ == y.n_ && x.orientation_ == y.orientation_;
    }

private:
    void rebuild();

    int n_;
    std::map<EdgeId, bool> orientation_;  // true = fwd
    std::vector<VarId> vertices_;
    std::vector<Arrow> arrows_;
};

// DimVec helpers for command-line style "a=1" pairs.
DimVec dimvec_parse_assignments(const std::vector<std::string>& pairs);

}  // namespace dnq
