#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dnq/quiver.hpp"
#include "dnq/roots.hpp"

namespace dnq {

// F-polynomial transport under a BGP reflection at a sink or source.  Only
// the arrow multiplicities around `at` enter, so the core is usable for any
// quiver; `into`/`outof` list (vertex, #arrows) pairs around `at`.
LaurentPoly reflect_fpoly_generic(VarId at, const LaurentPoly& f, const DimVec& m, bool sink,
                                  const std::vector<std::pair<VarId, int>>& into,
                                  const std::vector<std::pair<VarId, int>>& outof);

LaurentPoly reflect_fpoly(const QuiverDn& q, VarId at, const LaurentPoly& f, const DimVec& m, bool sink);

// x^m F(1/x); involution on F-polynomials of top term x^m.
LaurentPoly dual_fpoly(const LaurentPoly& f, const DimVec& m);

// Lifts an F-polynomial from D~(n-1) to D~n at chain position i: the new
// inner vertex is q_{i+1} of the target quiver (subspace orientation), with
// x_i -> x_i(1+x_{i+1}) and the far side picking up x_{i+1}(1+x_{i+1})^{-1}.
LaurentPoly reduce_type_one(const LaurentPoly& f_hat, int i, int n);

// F-polynomial of the unique indecomposable of a positive real root,
// transported from a simple along sink/source reflections; a pipeline fully
// independent of the closed-form dispatch below.
LaurentPoly reflection_chain(const QuiverDn& q, const DimVec& alpha);

// Closed-form layer.
LaurentPoly f_delta(const QuiverDn& q);
LaurentPoly f_homog(const QuiverDn& q, int r);
LaurentPoly homog_closed_form(const QuiverDn& q, int r);
LaurentPoly f_small(const QuiverDn& q, const DimVec& alpha);
LaurentPoly f_tube(const QuiverDn& q, const RootInfo& info);
LaurentPoly f_defect1(const QuiverDn& q, const RootInfo& info);
LaurentPoly f_defect2(const QuiverDn& q, const RootInfo& info);

// Dispatcher over classify_root; preinjective roots go through the
// opposite quiver and the duality involution.
LaurentPoly f_root(const QuiverDn& q, const DimVec& alpha);

// Caldero-Chapoton variable from an Euler-characteristic table, evaluated
// directly from the defining sum.
LaurentPoly cc_variable(const QuiverDn& q, const DimVec& m, const std::map<DimVec, Int>& euler_table);

// Euler table of a root from the closed-form dispatcher.
std::map<DimVec, Int> euler_table_from_froot(const QuiverDn& q, const DimVec& alpha);

// The monomial x^{m'} and substitution x -> x' that factor X_M through F_M.
// The exponent monomial can weight m by incoming arrow counts a(p,q) or by
// outgoing ones a(q,p); only the outgoing choice makes the factorization an
// identity (see README).
LaurentPoly cc_factorized(const QuiverDn& q, const DimVec& m, const LaurentPoly& f, bool incoming_weights);

// chi(Gr_{sigma_q e - m s_q}(sigma_q M)) from the table chi(Gr_{e+j s_q}(M)).
Int euler_reflect(const std::map<int, Int>& table, const Int& n, const Int& t, int m);

// chi(Gr_{e+m s_q}(M, q^0)) from the table chi(Gr_{e+i s_q}(M)).
Int euler_strata(const std::map<int, Int>& table, const Int& alpha_q, const Int& e_q, int m);

// chi(Gr_e(B)) = chi(Gr_{e-s_q}(N)) + chi(Gr_e(N)).
bool type_two_identity(const Int& chi_b, const Int& chi_n_shift, const Int& chi_n);

// Structural sanity shared by every F-polynomial: nonnegative integer
// coefficients, constant term 1 and top coefficient 1 at x^dim.
bool fpoly_sane(const LaurentPoly& f, const DimVec& dim);

}  // namespace dnq
