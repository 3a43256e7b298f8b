#ifndef TORIC_GEOMETRY_HPP
#define TORIC_GEOMETRY_HPP

#include "toric/errors.hpp"
#include "toric/guards.hpp"
#include "toric/numeric.hpp"

#include <vector>

namespace toric {

// Dual pairing <u, v> between the lattice M and its dual N.
Int pairing(const LatticePoint& u, const LatticePoint& v);

// Convex hull of finitely many lattice points, stored canonically: vertices
// deduplicated, reduced to the extreme points, and sorted lexicographically,
// so equality is structural. Immutable after construction.
class LatticePolytope {
public:
    explicit LatticePolytope(std::vector<LatticePoint> points);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    int affine_dim() const { return affine_dim_; }
    bool is_full_dimensional() const { return affine_dim_ == dim_; }

    bool operator==(const LatticePolytope& other) const = default;

private:
    int dim_;
    int affine_dim_;
    std::vector<LatticePoint> vertices_;
};

// Same canonical storage with exact rational vertex coordinates.
class RationalPolytope {
public:
    explicit RationalPolytope(std::vector<QPoint> points);
    RationalPolytope(const LatticePolytope& p);  // lattice polytopes embed

    int dim() const { return dim_; }
    const std::vector<QPoint>& vertices() const { return vertices_; }
    int affine_dim() const { return affine_dim_; }
    bool is_full_dimensional() const { return affine_dim_ == dim_; }

    bool operator==(const RationalPolytope& other) const = default;

private:
    int dim_;
    int affine_dim_;
    std::vector<QPoint> vertices_;
};

// One halfspace {u : <u, normal> >= -offset} with a primitive integer
// normal. Offsets are rational because divisor-shifted systems may cut out
// rational polytopes; systems coming from facet_representation always carry
// integer offsets.
struct HalfspaceRow {
    LatticePoint normal;
    Rat offset;

    bool operator==(const HalfspaceRow& other) const = default;
};

struct HalfspaceSystem {
    int dim = 0;
    std::vector<HalfspaceRow> rows;

    bool operator==(const HalfspaceSystem& other) const = default;
};

// Irredundant facet description of a full-dimensional lattice polytope with
// inward primitive normals. Rows are ordered counterclockwise from the
// positive x-axis in dimension 2, lexicographically otherwise. Throws
// not_full_dimensional for lower-dimensional input and guard_error above
// dimension 4.
HalfspaceSystem facet_representation(const LatticePolytope& p);

// Exact vertex set of a bounded halfspace system, found by solving every
// dim-subset of hyperplanes and keeping the feasible solutions. Throws
// empty_region / unbounded_region.
RationalPolytope vertex_enumeration(const HalfspaceSystem& h);

// All lattice points of the polytope, lexicographically ordered.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p, const Guards& guards = {});
std::vector<LatticePoint> lattice_points(const RationalPolytope& p, const Guards& guards = {});

// Lattice-point count of a plane polytope via Pick's identity:
// area + boundary/2 + 1, with the boundary measured by lattice length
// (per-edge gcd of the edge vector). Throws input_error on degenerate input.
Int pick_count(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b);

// Exact Lebesgue volume in the ambient dimension; lower-dimensional
// polytopes have volume zero.
Rat volume(const LatticePolytope& p);
Rat volume(const RationalPolytope& p);

// Mixed volume of dim bodies in dimension dim, evaluated by
// inclusion-exclusion over volumes of Minkowski sums of subsets.
Rat mixed_volume(const std::vector<RationalPolytope>& bodies);
Rat mixed_volume(const std::vector<LatticePolytope>& bodies);

// Unit segment from the origin to -e_axis (1-based axis) in dimension r.
LatticePolytope axis_segment(int axis, int r);

// Halfspace system of the zero divisor of the character with exponent u on
// the fan of the source polytope: same normals, offsets max(<u, v_F>, 0).
HalfspaceSystem char_zero_divisor_system(const HalfspaceSystem& h, const LatticePoint& u);

// System of the divisor shifted a times by the zero divisor of u:
// offsets a_F - a * max(<u, v_F>, 0). The result may cut out an empty
// region; that is for vertex_enumeration to detect.
HalfspaceSystem divisor_shift_system(const HalfspaceSystem& h, const LatticePoint& u, const Int& a);

// Deletes the given coordinate (1-based) and re-canonicalizes.
LatticePolytope project(const LatticePolytope& p, int drop_axis);

// Vertex extent along the given axis (1-based).
Rat width(const LatticePolytope& p, int axis);
Rat width(const RationalPolytope& p, int axis);

}  // namespace toric

#endif
