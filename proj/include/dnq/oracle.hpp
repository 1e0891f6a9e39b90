#pragma once

#include <map>
#include <vector>

#include "dnq/coeffq.hpp"
#include "dnq/quiver.hpp"
#include "dnq/roots.hpp"

namespace dnq {

// Dense integer matrix, rows x cols.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Explicit representation of Q: per-vertex dimensions and one integer matrix
// per edge, of shape (dim target x dim source) w.r.t. the orientation.
struct MatrixRep {
    DimVec dims;
    std::map<EdgeId, Mat> maps;

    int total_dim() const { return dims.height(); }

    // {"dims": {...}, "maps": {"a": [[row], ...], ...}} with row-major
    // integer matrices keyed by edge id.
    std::string to_json() const;
    static MatrixRep from_json(const std::string& text);
};

// Representation with a single 1-entry per arrow of the coefficient quiver.
MatrixRep tree_module(const CoeffQuiver& gamma, const QuiverDn& q);

// BGP reflection functor at a sink (kernel) or source (cokernel); exact
// rational linear algebra with integer clearing.  The result lives on
// q.reflect_quiver(at).
MatrixRep reflect_rep(const QuiverDn& q, VarId at, const MatrixRep& m);

// Realizes the unique indecomposable of a positive real root by reflecting
// a simple along the word used by the symbolic reflection chain.
MatrixRep rep_from_root(const QuiverDn& q, const DimVec& alpha);

// Four-subspace homogeneous tube representative on D~4 in subspace
// orientation, r in {1,2}; lambda outside {0,1} picks the tube.
MatrixRep homogeneous_rep(const QuiverDn& q, int r, long lambda);

// dim_k End(M), by the kernel of the intertwiner system.
long endomorphism_dimension(const QuiverDn& q, const MatrixRep& m);

// Direct sum, blockwise.
MatrixRep direct_sum(const QuiverDn& q, const MatrixRep& x, const MatrixRep& y);

// Number of subrepresentation tuples of type e over F_p.  Throws
// BadReduction unless every arrow matrix and every vertex stack keeps its
// rational rank mod p.
Int count_points(const QuiverDn& q, const MatrixRep& m, const DimVec& e, long p);

// Same count restricted to the stratum where the combined arrow map onto
// the chosen subspace at `sink` is surjective (Hom(U, S_sink) = 0).
Int count_points_q0(const QuiverDn& q, const MatrixRep& m, const DimVec& e, long p, VarId sink);

bool good_reduction(const QuiverDn& q, const MatrixRep& m, long p);

struct CountingPolynomial {
    std::vector<Int> coeffs;  // ascending powers of the field size
    std::vector<long> primes_used;

    Int value_at(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

// Lagrange interpolation of the point counts through enough good primes;
// integer coefficients asserted.
CountingPolynomial counting_polynomial(const QuiverDn& q, const MatrixRep& m, const DimVec& e);

// Euler characteristic chi(Gr_e(M)) = counting polynomial at 1.
Int euler_char(const QuiverDn& q, const MatrixRep& m, const DimVec& e);

// Sum over all 0 <= e <= dims of chi(Gr_e(M)) x^e.  Desk-scale guard on the
// total dimension.
LaurentPoly fpoly_oracle(const QuiverDn& q, const MatrixRep& m);

inline constexpr int kOracleDimGuard = 10;

}  // namespace dnq
