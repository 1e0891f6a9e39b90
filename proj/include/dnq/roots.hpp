#pragma once

#include <optional>
#include <vector>

#include "dnq/quiver.hpp"

namespace dnq {

enum class RootKind {
    RealPreprojective,
    RealPreinjective,
    RealRegular,
    ImaginaryMultipleOfDelta,
    ImaginaryRegularNonSchur,
    NotARoot,
};

// An exceptional tube, given by its quasi-simple roots listed in the
// tau^{-1}-cycle order: cycle[i+1] = tau^{-1}(cycle[i]) (indices mod rank).
struct TubeData {
    std::vector<DimVec> cycle;
    int rank() const { return static_cast<int>(cycle.size()); }
};

// The three exceptional tubes of Q: two of rank 2 and one of rank n-2
// (for n = 4 all three have rank 2).  Deterministic order: ranks 2 first,
// ties broken by the smallest quasi-simple root; each cycle starts at its
// smallest element.
std::vector<TubeData> exceptional_tubes(const QuiverDn& q);

struct RegularInfo {
    int tube_index = -1;  // into exceptional_tubes(q)
    int socle_pos = 0;    // chain start within the tube cycle
    int l = 0;            // position in the quasi-socle chain, 1..rank-1 (0 = in-tube imaginary)
    DimVec alpha0;        // m_l(0); zero when l = 0
    DimVec next;          // m_{l+1}(0), with m_rank(0) := delta
    DimVec top;           // m_{rank-1}(0) of the same chain
    int rank = 0;
};

struct PreprojInfo {
    int r = 0;
    DimVec t;  // normal form: alpha = r*delta + t with 0 <= t <= delta
    // delta - t is an injective root (preprojective side) resp. a projective
    // root (preinjective side, i.e. injective on the opposite quiver).
    bool delta_minus_t_injective = false;
};

struct Def2Info {
    DimVec m;  // defect -1 sub term
    DimVec n;  // defect -1 quotient term, later in the AR order
};

struct RootInfo {
    RootKind kind = RootKind::NotARoot;
    Int defect = 0;
    int r = 0;  // multiple of delta split off
    std::optional<RegularInfo> regular;
    std::optional<PreprojInfo> preproj;
    std::optional<Def2Info> def2;

    DimVec reconstruct(const QuiverDn& q) const;
};

// Classification of a nonnegative dimension vector per the Tits form and
// defect.  Throws NotARoot when q(alpha) is not 0 or 1.
RootInfo classify_root(const QuiverDn& q, const DimVec& alpha);

// RootInfo addressing the representation M_{r,l} on the chain of the tube
// starting at cycle position socle_pos (l = 0 selects the in-tube
// representation of dimension r*delta with that quasi-socle).
RootInfo tube_root_info(const QuiverDn& q, int tube_index, int socle_pos, int l, int r);

// tau^s(alpha) = dim P_p for a preprojective real root; returns (s, p).
std::pair<int, VarId> tau_steps_to_projective(const QuiverDn& q, const DimVec& alpha);

// Hom/Ext dimensions between the indecomposables of two preprojective real
// roots, computed by tau-walks and dim P_q evaluations.
long hom_preprojective(const QuiverDn& q, const DimVec& x, const DimVec& y);
long ext_preprojective(const QuiverDn& q, const DimVec& x, const DimVec& y);

// Lemma-def2 style splitting of a defect -2 preprojective root: dim B = m + n
// with both of defect -1, Hom(M,N) = Ext(M,N) = Hom(N,M) = 0, Ext(N,M) = 1.
Def2Info def2_split(const QuiverDn& q, const DimVec& b);

// All positive real roots of height <= hmax, ascending by (height, vector).
std::vector<DimVec> positive_real_roots(const QuiverDn& q, int hmax);

// A word of reflections at sinks/sources taking alpha down to a seed whose
// F-polynomial is known independently: a simple root when one is reachable,
// otherwise (regular roots locked inside a tube) a tube representation in
// subspace orientation, to be seeded by coefficient-quiver enumeration.
// steps[i].q is a sink or source of the quiver reached after steps[0..i-1].
struct ReflectionStep {
    VarId q;
    bool at_sink;  // of the quiver the step was applied to
};
struct ReflectionWord {
    std::vector<ReflectionStep> steps;
    bool simple_seed = true;
    VarId simple;  // valid when simple_seed
    DimVec base;   // the root reached by the word (s_simple when simple_seed)
};
ReflectionWord reflection_word(const QuiverDn& q, const DimVec& alpha);

// Type-one reduction at the junction of the subspace orientation: when
// beta_c + beta_d <= beta_{q_{n-4}} = beta_{q_{n-5}} (n >= 5), deleting the
// junction vertex induces a root of D~(n-1) with c, d reattached below.
std::optional<DimVec> reduce_root_at_junction(const QuiverDn& q, const DimVec& beta);

}  // namespace dnq
