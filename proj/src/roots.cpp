#include "dnq/roots.hpp"

#include "dnq/coeffq.hpp"
#include <deque>
#include <set>

#include <algorithm>

namespace dnq {

namespace {

// max k >= 0 with alpha - k*delta >= 0
int delta_multiplicity(const QuiverDn& q, const DimVec& alpha) {
    DimVec delta = q.delta();
    int k = 0;
    DimVec cur = alpha - delta;
    while (cur.nonnegative()) {
        ++k;
        cur = cur - delta;
    }
    return k;
}

}  // namespace

std::vector<TubeData> exceptional_tubes(const QuiverDn& q) {
    DimVec delta = q.delta();

    // Regular real roots strictly between 0 and delta.
    std::vector<DimVec> regs;
    {
        std::vector<VarId> vs = q.vertices();
        DimVec cur;
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == vs.size()) {
                if (!cur.is_zero() && !(cur == delta) && q.tits_form(cur) == 1 && q.defect(cur) == 0)
                    regs.push_back(cur);
                return;
            }
            for (int x = 0; x <= delta.at(vs[i]); ++x) {
                cur.set(vs[i], x);
                self(self, i + 1);
            }
            cur.set(vs[i], 0);
        };
        rec(rec, 0);
    }

    // tau^{-1}-orbits; a tube's quasi-simples are exactly the orbit summing
    // to delta.
    std::vector<TubeData> tubes;
    std::vector<DimVec> seen;
    for (const DimVec& start : regs) {
        if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
        std::vector<DimVec> orbit{start};
        DimVec cur = q.tau_dim(start, QuiverDn::TauDir::Inverse);
        while (!(cur == start)) {
            orbit.push_back(cur);
            cur = q.tau_dim(cur, QuiverDn::TauDir::Inverse);
            if (orbit.size() > regs.size()) throw std::logic_error("tau orbit failed to close");
        }
        for (auto& d : orbit) seen.push_back(d);
        DimVec sum;
        for (auto& d : orbit) sum = sum + d;
        if (sum == delta) {
            // rotate so the cycle starts at its smallest element
            size_t best = 0;
            for (size_t i = 1; i < orbit.size(); ++i)
                if (orbit[i] < orbit[best]) best = i;
            std::rotate(orbit.begin(), orbit.begin() + best, orbit.end());
            tubes.push_back(TubeData{orbit});
        }
    }
    std::sort(tubes.begin(), tubes.end(), [](const TubeData& x, const TubeData& y) {
        if (x.rank() != y.rank()) return x.rank() < y.rank();
        return x.cycle.front() < y.cycle.front();
    });
    if (tubes.size() != 3) throw std::logic_error("expected exactly three exceptional tubes");
    return tubes;
}

DimVec RootInfo::reconstruct(const QuiverDn& q) const {
    DimVec rd = q.delta() * r;
    switch (kind) {
        case RootKind::ImaginaryMultipleOfDelta:
        case RootKind::ImaginaryRegularNonSchur: {
            DimVec out = rd;
            if (regular && regular->l > 0) out = out + regular->alpha0;
            return out;
        }
        case RootKind::RealRegular: return rd + regular->alpha0;
        case RootKind::RealPreprojective:
        case RootKind::RealPreinjective: return rd + preproj->t;
        default: return DimVec();
    }
}

RootInfo tube_root_info(const QuiverDn& q, int tube_index, int socle_pos, int l, int r) {
    auto tubes = exceptional_tubes(q);
    if (tube_index < 0 || tube_index >= static_cast<int>(tubes.size()))
        throw std::invalid_argument("tube index out of range");
    const TubeData& tube = tubes[tube_index];
    int t = tube.rank();
    if (l < 0 || l >= t) throw std::invalid_argument("chain position l must lie in [0, rank)");
    if (socle_pos < 0 || socle_pos >= t) throw std::invalid_argument("socle position out of range");
    if (r < 0 || (r == 0 && l == 0)) throw std::invalid_argument("zero representation");

    auto partial = [&](int len) {
        DimVec s;
        for (int j = 0; j < len; ++j) s = s + tube.cycle[(socle_pos + j) % t];
        return s;
    };
    RegularInfo reg;
    reg.tube_index = tube_index;
    reg.socle_pos = socle_pos;
    reg.l = l;
    reg.rank = t;
    reg.alpha0 = partial(l);
    reg.next = (l + 1 < t) ? partial(l + 1) : q.delta();
    reg.top = partial(t - 1);

    RootInfo info;
    info.kind = l == 0 ? RootKind::ImaginaryRegularNonSchur : RootKind::RealRegular;
    info.defect = 0;
    info.r = r;
    info.regular = reg;
    return info;
}

RootInfo classify_root(const QuiverDn& q, const DimVec& alpha) {
    if (!alpha.nonnegative()) throw NotARoot("dimension vector has a negative entry");
    if (alpha.is_zero()) throw NotARoot("zero dimension vector");
    Int tits = q.tits_form(alpha);
    DimVec delta = q.delta();

    if (tits == 0) {
        int r = delta_multiplicity(q, alpha);
        if (!(alpha == delta * r)) throw NotARoot("isotropic vector that is not a multiple of delta");
        RootInfo info;
        info.kind = RootKind::ImaginaryMultipleOfDelta;
        info.defect = 0;
        info.r = r;
        return info;
    }
    if (tits != 1) throw NotARoot("Tits form value " + tits.str() + ", not a root");

    Int defect = q.defect(alpha);
    int r = delta_multiplicity(q, alpha);
    DimVec rest = alpha - delta * r;

    if (defect == 0) {
        auto tubes = exceptional_tubes(q);
        for (int ti = 0; ti < static_cast<int>(tubes.size()); ++ti) {
            const TubeData& tube = tubes[ti];
            int t = tube.rank();
            for (int start = 0; start < t; ++start) {
                DimVec partial;
                for (int l = 1; l <= t - 1; ++l) {
                    partial = partial + tube.cycle[(start + l - 1) % t];
                    if (partial == rest) {
                        RootInfo info = tube_root_info(q, ti, start, l, r);
                        info.kind = RootKind::RealRegular;
                        return info;
                    }
                }
            }
        }
        throw NotARoot("regular vector matches no quasi-socle chain");
    }

    // Preprojective / preinjective.
    RootInfo info;
    info.kind = defect < 0 ? RootKind::RealPreprojective : RootKind::RealPreinjective;
    info.defect = defect;
    info.r = r;
    PreprojInfo pp;
    pp.r = r;
    pp.t = rest;
    if (!rest.leq(delta))
        throw NotARoot("normal form t = alpha - r*delta exceeds delta");
    DimVec co = delta - rest;
    pp.delta_minus_t_injective = defect < 0 ? q.is_injective_root(co) : q.is_projective_root(co);
    info.preproj = pp;

    if (defect == -2 || defect == 2) {
        // Small defect-2 roots (alpha <= delta, e.g. inner projectives) have
        // no middle-term splitting; they are handled by the reflection chain.
        try {
            info.def2 = defect == -2 ? def2_split(q, alpha) : def2_split(q.opposite(), alpha);
        } catch (const NoSplitting&) {
            if (!alpha.leq(delta)) throw;
        }
    }
    return info;
}

std::pair<int, VarId> tau_steps_to_projective(const QuiverDn& q, const DimVec& alpha) {
    DimVec cur = alpha;
    for (int s = 0; s < 4096; ++s) {
        for (VarId v : q.vertices())
            if (cur == q.projective_root(v)) return {s, v};
        cur = q.tau_dim(cur, QuiverDn::TauDir::Forward);
    }
    throw std::logic_error("tau walk did not reach a projective (non-preprojective input?)");
}

long hom_preprojective(const QuiverDn& q, const DimVec& x, const DimVec& y) {
    auto [s, p] = tau_steps_to_projective(q, x);
    auto [t, dummy] = tau_steps_to_projective(q, y);
    if (t < s) return 0;  // no path in the AR order
    DimVec shifted = y;
    for (int i = 0; i < s; ++i) shifted = q.tau_dim(shifted, QuiverDn::TauDir::Forward);
    return shifted.at(p);  // Hom(P_p, Z) = dim Z_p
}

long ext_preprojective(const QuiverDn& q, const DimVec& x, const DimVec& y) {
    auto [s, p] = tau_steps_to_projective(q, x);
    if (s == 0) return 0;  // projective
    DimVec tau_x = q.tau_dim(x, QuiverDn::TauDir::Forward);
    return hom_preprojective(q, y, tau_x);  // Ext(X,Y) = D Hom(Y, tau X)
}

Def2Info def2_split(const QuiverDn& q, const DimVec& b) {
    if (q.defect(b) != -2) throw NoSplitting("splitting is defined for defect -2 roots");

    // Enumerate candidate defect -1 summands m <= b.
    std::vector<DimVec> candidates;
    {
        std::vector<VarId> vs = q.vertices();
        DimVec cur;
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == vs.size()) {
                if (!cur.is_zero() && q.tits_form(cur) == 1 && q.defect(cur) == -1) candidates.push_back(cur);
                return;
            }
            for (int x = 0; x <= b.at(vs[i]); ++x) {
                cur.set(vs[i], x);
                self(self, i + 1);
            }
            cur.set(vs[i], 0);
        };
        rec(rec, 0);
    }

    std::optional<Def2Info> best;
    long best_span = 0;
    for (const DimVec& m : candidates) {
        DimVec n = b - m;
        if (!n.nonnegative() || n.is_zero()) continue;
        if (q.tits_form(n) != 1 || q.defect(n) != -1) continue;
        if (hom_preprojective(q, m, n) != 0) continue;
        if (ext_preprojective(q, m, n) != 0) continue;
        if (hom_preprojective(q, n, m) != 0) continue;
        if (ext_preprojective(q, n, m) != 1) continue;
        DimVec tm;
        try {
            tm = q.tau_dim(m, QuiverDn::TauDir::Inverse);
        } catch (const OutOfCategory&) {
            continue;
        }
        DimVec g = n - tm;
        if (!g.nonnegative()) continue;
        if (!g.is_zero() && !(q.tits_form(g) == 1 && q.defect(g) == 0)) continue;
        long span = tau_steps_to_projective(q, n).first - tau_steps_to_projective(q, m).first;
        if (!best || span < best_span || (span == best_span && m < best->m)) {
            best = Def2Info{m, n};
            best_span = span;
        }
    }
    if (!best) throw NoSplitting("no defect -1 pair (M, N) found for " + b.to_string());
    return *best;
}

ReflectionWord reflection_word(const QuiverDn& q, const DimVec& alpha) {
    if (!alpha.nonnegative() || alpha.is_zero() || q.tits_form(alpha) != 1)
        throw NotARoot("reflection chain needs a positive real root");

    ReflectionWord word;
    QuiverDn cur = q;
    DimVec beta = alpha;

    auto simple_of = [](const DimVec& d) -> std::optional<VarId> {
        if (d.height() != 1) return std::nullopt;
        for (auto& [v, x] : d.entries())
            if (x == 1) return v;
        return std::nullopt;
    };

    if (auto s = simple_of(beta)) {
        word.simple = *s;
        word.base = beta;
        return word;
    }

    // Shortest word by breadth-first search over (orientation, root) states.
    // Descents are not monotone in the height, so intermediate states may sit
    // above the start height; the slack escalates if needed.  The state space
    // is bounded by #orientations x #roots below the cap, so this stays small.
    // Some regular roots are locked inside their tube (the reachable set
    // contains no simple at all); for those, the fallback seed is the tube
    // representation carried to subspace orientation.
    struct Node {
        QuiverDn q;
        DimVec beta;
        std::vector<ReflectionStep> path;
    };
    const QuiverDn sub = QuiverDn::subspace(q.n());
    // A subspace-orientation state counts as a seed when its F-polynomial is
    // available from enumeration: a glued chain type on D~4, or a root the
    // junction reduction sends down one rank.
    auto seedable = [&](const DimVec& b) {
        if (q.n() == 4) return match_tube_chain_type(b).has_value();
        return reduce_root_at_junction(sub, b).has_value();
    };
    std::optional<ReflectionWord> tube_seed;
    for (int slack : {2, 6, 12, 24}) {
        const int hmax = beta.height() + slack;
        std::deque<Node> queue{{cur, beta, {}}};
        std::set<std::string> visited{cur.key() + "#" + beta.to_string()};
        if (!tube_seed && cur == sub && seedable(beta)) tube_seed = ReflectionWord{{}, false, VarId(), beta};
        while (!queue.empty()) {
            Node node = std::move(queue.front());
            queue.pop_front();
            for (VarId v : node.q.vertices()) {
                if (!node.q.is_sink(v) && !node.q.is_source(v)) continue;
                DimVec nb = node.q.reflect_dim(v, node.beta);
                if (!nb.nonnegative() || nb.height() > hmax) continue;
                QuiverDn nq = node.q.reflect_quiver(v);
                if (!visited.insert(nq.key() + "#" + nb.to_string()).second) continue;
                Node child{nq, nb, node.path};
                child.path.push_back({v, node.q.is_sink(v)});
                if (auto s = simple_of(nb)) {
                    word.steps = std::move(child.path);
                    word.simple = *s;
                    word.base = nb;
                    return word;
                }
                if (!tube_seed && nq == sub && seedable(nb))
                    tube_seed = ReflectionWord{child.path, false, VarId(), nb};
                queue.push_back(std::move(child));
            }
        }
    }
    if (tube_seed && q.defect(alpha) == 0) return *tube_seed;
    throw NotARoot("no sink/source reflection word reduces " + alpha.to_string());
}

std::optional<DimVec> reduce_root_at_junction(const QuiverDn& q, const DimVec& beta) {
    const int n = q.n();
    if (n < 5) return std::nullopt;
    const VarId junction = VarId::inner(n - 4);
    const VarId below = VarId::inner(n - 5);
    int outer = beta.at(VarId::c()) + beta.at(VarId::d());
    if (beta.at(junction) != beta.at(below) || outer > beta.at(junction)) return std::nullopt;
    DimVec reduced = beta;
    reduced.set(junction, 0);
    return reduced;
}

std::vector<DimVec> positive_real_roots(const QuiverDn& q, int hmax) {
    std::vector<DimVec> out;
    std::vector<VarId> vs = q.vertices();
    DimVec cur;
    auto rec = [&](auto&& self, size_t i, int budget) -> void {
        if (i == vs.size()) {
            if (!cur.is_zero() && q.tits_form(cur) == 1) out.push_back(cur);
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            cur.set(vs[i], x);
            self(self, i + 1, budget - x);
        }
        cur.set(vs[i], 0);
    };
    rec(rec, 0, hmax);
    std::sort(out.begin(), out.end(), [](const DimVec& x, const DimVec& y) {
        if (x.height() != y.height()) return x.height() < y.height();
        return x < y;
    });
    return out;
}

}  // namespace dnq
