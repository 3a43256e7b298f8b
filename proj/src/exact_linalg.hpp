#ifndef TORIC_EXACT_LINALG_HPP
#define TORIC_EXACT_LINALG_HPP

// Internal exact-rational linear algebra and convex-hull kernel. Everything
// here operates on small dense matrices (dimension <= 4, a few dozen rows),
// so plain Gaussian elimination over cpp_rational is the right tool.

#include "toric/numeric.hpp"

#include <optional>
#include <vector>

namespace toric::detail {

using QMat = std::vector<std::vector<Rat>>;

Rat det(QMat m);
int rank(QMat m);

// Solves the square system a * x = b; empty optional when a is singular.
std::optional<std::vector<Rat>> solve_square(QMat a, std::vector<Rat> b);

// Solves a * x = b for a general (possibly non-square) a; empty optional
// when the system is inconsistent. Free variables are set to zero.
std::optional<std::vector<Rat>> solve_consistent(QMat a, std::vector<Rat> b);

// Affine dimension of a point set (dimension of the spanned flat).
int affine_rank(const std::vector<QPoint>& pts);

// Exact affine chart: origin pts[base], basis of difference vectors, and
// per-point coordinates in that basis. Only valid when every point lies in
// the affine hull (always true when pts spans it).
struct AffineChart {
    int dim = 0;                       // affine dimension d
    QPoint origin;                     // chart origin
    std::vector<QPoint> basis;         // d independent difference vectors
    std::vector<QPoint> coords;        // per input point, d coordinates
};
AffineChart affine_chart(const std::vector<QPoint>& pts);

// Primitive integer normal of the hyperplane spanned by dim-1 independent
// difference vectors (generalized cross product); zero vector when the
// differences are dependent.
LatticePoint hyperplane_normal(const std::vector<QPoint>& diffs, int dim);

// Exact phase-1 simplex: is p a convex combination of pts?
bool point_in_hull(const QPoint& p, const std::vector<QPoint>& pts);

// Indices of the extreme points of pts (deduplicated by the caller),
// valid in any dimension.
std::vector<std::size_t> extreme_point_indices(const std::vector<QPoint>& pts);

// Counterclockwise boundary cycle of a full-dimensional planar point set
// (indices into pts; pts need not be deduplicated).
std::vector<std::size_t> convex_cycle_2d(const std::vector<QPoint>& pts);

// One supporting halfspace <x, normal> >= -offset together with the indices
// of the vertices lying on its hyperplane.
struct FacetRow {
    LatticePoint normal;            // primitive inward integer normal
    Rat offset;
    std::vector<std::size_t> active;
};

// All facets of the full-dimensional polytope with the given extreme
// vertices. Rows are angle-ordered in dimension 2 (counterclockwise from
// the positive x-axis) and ordered lexicographically by normal otherwise.
std::vector<FacetRow> enumerate_facets(const std::vector<QPoint>& vertices, int dim);

// Decomposition of a full-dimensional polytope into simplices, returned as
// (dim+1)-tuples of vertex indices. Cones each facet not containing the
// first vertex over that vertex, recursing inside facet charts.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<QPoint>& vertices, int dim);

// Exact Lebesgue volume of conv(vertices) in ambient dimension dim
// (zero when the hull is lower-dimensional).
Rat hull_volume(const std::vector<QPoint>& vertices, int dim);

// Linear inequality c . x + a >= 0 used by the Fourier-Motzkin check.
struct LinIneq {
    std::vector<Rat> coeff;
    Rat constant;
};

// Exact Fourier-Motzkin feasibility test.
bool feasible(std::vector<LinIneq> rows, int dim);

}  // namespace toric::detail

#endif
