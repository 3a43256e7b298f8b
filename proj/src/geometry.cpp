#include "toric/geometry.hpp"

#include "exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace toric {

namespace {

using detail::affine_chart;
using detail::affine_rank;
using detail::enumerate_facets;
using detail::extreme_point_indices;
using detail::hull_volume;

std::vector<QPoint> lift(const std::vector<LatticePoint>& pts) {
    std::vector<QPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(to_qpoint(p));
    return out;
}

void check_uniform_dim(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw input_error("polytope needs at least one vertex");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw dimension_mismatch("vertex dimensions differ");
    if (pts[0].empty()) throw input_error("polytope dimension must be at least 1");
}

void check_uniform_dim_q(const std::vector<QPoint>& pts) {
    if (pts.empty()) throw input_error("polytope needs at least one vertex");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw dimension_mismatch("vertex dimensions differ");
    if (pts[0].empty()) throw input_error("polytope dimension must be at least 1");
}

Int dot(const LatticePoint& u, const LatticePoint& v) {
    Int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

Rat dot_q(const QPoint& u, const LatticePoint& v) {
    Rat acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * Rat(v[i]);
    return acc;
}

// Exact point-membership oracle for conv(vertices); full-dimensional hulls
// test against facets, lower-dimensional ones inside their affine chart.
class HullMembership {
public:
    HullMembership(const std::vector<QPoint>& vertices, int dim) : dim_(dim) {
        adim_ = affine_rank(vertices);
        if (adim_ == dim_) {
            facets_ = enumerate_facets(vertices, dim_);
        } else {
            chart_ = affine_chart(vertices);
            basis_matrix_.assign(dim_, std::vector<Rat>(chart_.dim));
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < chart_.dim; ++j) basis_matrix_[i][j] = chart_.basis[j][i];
            if (adim_ >= 1) facets_ = enumerate_facets(chart_.coords, adim_);
            single_ = vertices[0];
        }
    }

    bool contains(const QPoint& p) const {
        if (adim_ == dim_) return satisfies(p, facets_);
        if (adim_ == 0) return p == single_;
        std::vector<Rat> rhs(dim_);
        for (int i = 0; i < dim_; ++i) rhs[i] = p[i] - chart_.origin[i];
        auto local = detail::solve_consistent(basis_matrix_, rhs);
        if (!local) return false;  // outside the affine hull
        return satisfies(*local, facets_);
    }

private:
    static bool satisfies(const QPoint& p, const std::vector<detail::FacetRow>& rows) {
        for (const auto& row : rows) {
            Rat val = 0;
            for (std::size_t j = 0; j < p.size(); ++j) val += p[j] * Rat(row.normal[j]);
            if (val < -row.offset) return false;
        }
        return true;
    }

    int dim_;
    int adim_;
    std::vector<detail::FacetRow> facets_;
    detail::AffineChart chart_;
    detail::QMat basis_matrix_;
    QPoint single_;
};

template <typename Point>
std::vector<LatticePoint> lattice_points_impl(const std::vector<Point>& vertices, int dim,
                                              const Guards& guards) {
    if (dim > guards.max_dim)
        throw guard_error("lattice_points: dimension exceeds the cap of " +
                          std::to_string(guards.max_dim));
    std::vector<Int> lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        Rat mn(vertices[0][j]), mx(vertices[0][j]);
        for (const auto& v : vertices) {
            Rat x(v[j]);
            if (x < mn) mn = x;
            if (x > mx) mx = x;
        }
        lo[j] = rat_ceil(mn);
        hi[j] = rat_floor(mx);
    }
    Int cells = 1;
    for (int j = 0; j < dim; ++j) {
        if (hi[j] < lo[j]) return {};
        cells *= hi[j] - lo[j] + 1;
    }
    if (cells > guards.max_lattice_points)
        throw guard_error("lattice_points: bounding box exceeds max_lattice_points (" +
                          std::to_string(guards.max_lattice_points) + " cells)");

    std::vector<QPoint> lifted;
    lifted.reserve(vertices.size());
    for (const auto& v : vertices) {
        QPoint q(dim);
        for (int j = 0; j < dim; ++j) q[j] = Rat(v[j]);
        lifted.push_back(std::move(q));
    }
    HullMembership membership(lifted, dim);

    std::vector<LatticePoint> out;
    LatticePoint cursor = lo;
    while (true) {
        QPoint q(dim);
        for (int j = 0; j < dim; ++j) q[j] = Rat(cursor[j]);
        if (membership.contains(q)) out.push_back(cursor);
        int j = dim - 1;
        while (j >= 0 && cursor[j] == hi[j]) {
            cursor[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++cursor[j];
    }
    return out;  // odometer order with the first coordinate slowest: lexicographic
}

}  // namespace

Int pairing(const LatticePoint& u, const LatticePoint& v) {
    if (u.size() != v.size()) throw dimension_mismatch("pairing: dimensions differ");
    return dot(u, v);
}

LatticePolytope::LatticePolytope(std::vector<LatticePoint> points) {
    check_uniform_dim(points);
    dim_ = static_cast<int>(points[0].size());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto keep = extreme_point_indices(lift(points));
    vertices_.reserve(keep.size());
    for (std::size_t idx : keep) vertices_.push_back(points[idx]);
    std::sort(vertices_.begin(), vertices_.end());
    affine_dim_ = affine_rank(lift(vertices_));
}

RationalPolytope::RationalPolytope(std::vector<QPoint> points) {
    check_uniform_dim_q(points);
    dim_ = static_cast<int>(points[0].size());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto keep = extreme_point_indices(points);
    vertices_.reserve(keep.size());
    for (std::size_t idx : keep) vertices_.push_back(points[idx]);
    std::sort(vertices_.begin(), vertices_.end());
    affine_dim_ = affine_rank(vertices_);
}

RationalPolytope::RationalPolytope(const LatticePolytope& p)
    : dim_(p.dim()), affine_dim_(p.affine_dim()) {
    vertices_.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) vertices_.push_back(to_qpoint(v));
}

HalfspaceSystem facet_representation(const LatticePolytope& p) {
    Guards guards;
    if (p.dim() > guards.max_dim)
        throw guard_error("facet_representation: dimension exceeds the cap of " +
                          std::to_string(guards.max_dim));
    if (!p.is_full_dimensional())
        throw not_full_dimensional(
            "facet_representation: polytope is not full-dimensional; project away unused axes first");
    HalfspaceSystem h;
    h.dim = p.dim();
    for (auto& row : enumerate_facets(lift(p.vertices()), p.dim()))
        h.rows.push_back({std::move(row.normal), std::move(row.offset)});
    return h;
}

RationalPolytope vertex_enumeration(const HalfspaceSystem& h) {
    Guards guards;
    const int d = h.dim;
    if (d < 1 || d > guards.max_dim)
        throw guard_error("vertex_enumeration: dimension exceeds the cap of " +
                          std::to_string(guards.max_dim));

    std::vector<detail::LinIneq> ineqs;
    ineqs.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        detail::LinIneq li;
        li.coeff.resize(d);
        for (int j = 0; j < d; ++j) li.coeff[j] = Rat(row.normal[j]);
        li.constant = row.offset;
        ineqs.push_back(std::move(li));
    }
    if (!detail::feasible(ineqs, d)) throw empty_region("vertex_enumeration: empty region");

    // Boundedness: the recession cone {x : <x, v_F> >= 0} must be trivial.
    detail::QMat normals;
    for (const auto& row : h.rows) {
        std::vector<Rat> r(d);
        for (int j = 0; j < d; ++j) r[j] = Rat(row.normal[j]);
        normals.push_back(std::move(r));
    }
    if (detail::rank(normals) < d)
        throw unbounded_region("vertex_enumeration: unbounded region (normals do not span)");
    auto in_recession_cone = [&](const LatticePoint& dir) {
        for (const auto& row : h.rows)
            if (dot(dir, row.normal) < 0) return false;
        return true;
    };
    if (d == 1) {
        bool has_pos = false, has_neg = false;
        for (const auto& row : h.rows) {
            if (row.normal[0] > 0) has_pos = true;
            if (row.normal[0] < 0) has_neg = true;
        }
        if (!has_pos || !has_neg) throw unbounded_region("vertex_enumeration: unbounded region");
    } else {
        const std::size_t n = h.rows.size();
        std::vector<std::size_t> comb(d - 1);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        bool more = n >= comb.size();
        while (more) {
            std::vector<QPoint> dirs;
            for (std::size_t idx : comb) {
                QPoint r(d);
                for (int j = 0; j < d; ++j) r[j] = Rat(h.rows[idx].normal[j]);
                dirs.push_back(std::move(r));
            }
            LatticePoint ray = detail::hyperplane_normal(dirs, d);
            bool nonzero = std::any_of(ray.begin(), ray.end(), [](const Int& x) { return x != 0; });
            if (nonzero) {
                LatticePoint neg(ray.size());
                for (std::size_t j = 0; j < ray.size(); ++j) neg[j] = -ray[j];
                if (in_recession_cone(ray) || in_recession_cone(neg))
                    throw unbounded_region("vertex_enumeration: unbounded region");
            }
            int i = static_cast<int>(comb.size()) - 1;
            while (i >= 0 && comb[i] == n - comb.size() + i) --i;
            if (i < 0)
                more = false;
            else {
                ++comb[i];
                for (std::size_t j = i + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }

    // Basic feasible solutions: all d-subsets of hyperplanes.
    std::vector<QPoint> found;
    const std::size_t n = h.rows.size();
    std::vector<std::size_t> comb(d);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    bool more = n >= static_cast<std::size_t>(d);
    while (more) {
        detail::QMat a(d, std::vector<Rat>(d));
        std::vector<Rat> b(d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) a[i][j] = Rat(h.rows[comb[i]].normal[j]);
            b[i] = -h.rows[comb[i]].offset;
        }
        if (auto x = detail::solve_square(std::move(a), std::move(b))) {
            bool ok = true;
            for (const auto& row : h.rows) {
                if (dot_q(*x, row.normal) < -row.offset) {
                    ok = false;
                    break;
                }
            }
            if (ok) found.push_back(std::move(*x));
        }
        int i = d - 1;
        while (i >= 0 && comb[i] == n - d + i) --i;
        if (i < 0)
            more = false;
        else {
            ++comb[i];
            for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) throw std::logic_error("vertex_enumeration: feasible bounded region without vertices");
    return RationalPolytope(std::move(found));
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, const Guards& guards) {
    return lattice_points_impl(p.vertices(), p.dim(), guards);
}

std::vector<LatticePoint> lattice_points(const RationalPolytope& p, const Guards& guards) {
    return lattice_points_impl(p.vertices(), p.dim(), guards);
}

Int pick_count(const LatticePolytope& p) {
    if (p.dim() != 2) throw input_error("pick_count: requires a plane polytope");
    if (p.affine_dim() < 2) throw input_error("pick_count: degenerate polytope has no interior");
    auto cycle = detail::convex_cycle_2d(lift(p.vertices()));
    const auto& v = p.vertices();
    Rat twice_area = 0;
    Int boundary = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = v[cycle[i]];
        const auto& b = v[cycle[(i + 1) % cycle.size()]];
        twice_area += Rat(a[0] * b[1] - b[0] * a[1]);
        boundary += boost::multiprecision::gcd(b[0] - a[0], b[1] - a[1]);
    }
    if (twice_area < 0) twice_area = -twice_area;
    Rat count = twice_area / 2 + Rat(boundary) / 2 + 1;
    if (!is_integral(count)) throw std::logic_error("pick_count: non-integral result");
    return rat_num(count);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("minkowski_sum: dimensions differ");
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& u : a.vertices()) {
        for (const auto& v : b.vertices()) {
            LatticePoint s(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) s[j] = u[j] + v[j];
            sums.push_back(std::move(s));
        }
    }
    return LatticePolytope(std::move(sums));
}

RationalPolytope minkowski_sum(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("minkowski_sum: dimensions differ");
    std::vector<QPoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& u : a.vertices()) {
        for (const auto& v : b.vertices()) {
            QPoint s(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) s[j] = u[j] + v[j];
            sums.push_back(std::move(s));
        }
    }
    return RationalPolytope(std::move(sums));
}

Rat volume(const LatticePolytope& p) {
    Guards guards;
    if (p.dim() > guards.max_dim)
        throw guard_error("volume: dimension exceeds the cap of " + std::to_string(guards.max_dim));
    return hull_volume(lift(p.vertices()), p.dim());
}

Rat volume(const RationalPolytope& p) {
    Guards guards;
    if (p.dim() > guards.max_dim)
        throw guard_error("volume: dimension exceeds the cap of " + std::to_string(guards.max_dim));
    return hull_volume(p.vertices(), p.dim());
}

Rat mixed_volume(const std::vector<RationalPolytope>& bodies) {
    if (bodies.empty()) throw input_error("mixed_volume: needs polytopes");
    const int r = bodies[0].dim();
    Guards guards;
    if (r > guards.max_dim)
        throw guard_error("mixed_volume: dimension exceeds the cap of " + std::to_string(guards.max_dim));
    if (bodies.size() != static_cast<std::size_t>(r))
        throw dimension_mismatch("mixed_volume: needs exactly dim polytopes");
    for (const auto& b : bodies)
        if (b.dim() != r) throw dimension_mismatch("mixed_volume: dimensions differ");

    const std::size_t masks = std::size_t{1} << r;
    std::vector<std::optional<RationalPolytope>> sums(masks);
    Rat total = 0;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        int low = std::countr_zero(mask);
        std::size_t rest = mask & (mask - 1);
        if (rest == 0)
            sums[mask] = bodies[low];
        else
            sums[mask] = minkowski_sum(*sums[rest], bodies[low]);
        int j = std::popcount(mask);
        Rat vol = hull_volume(sums[mask]->vertices(), r);
        total += ((r - j) % 2 == 0) ? vol : -vol;
    }
    Int factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    return total / Rat(factorial);
}

Rat mixed_volume(const std::vector<LatticePolytope>& bodies) {
    std::vector<RationalPolytope> lifted;
    lifted.reserve(bodies.size());
    for (const auto& b : bodies) lifted.emplace_back(b);
    return mixed_volume(lifted);
}

LatticePolytope axis_segment(int axis, int r) {
    if (r < 1) throw input_error("axis_segment: dimension must be at least 1");
    if (axis < 1 || axis > r) throw input_error("axis_segment: axis out of range");
    LatticePoint origin(r, Int(0)), tip(r, Int(0));
    tip[axis - 1] = -1;
    return LatticePolytope({origin, tip});
}

HalfspaceSystem char_zero_divisor_system(const HalfspaceSystem& h, const LatticePoint& u) {
    if (static_cast<int>(u.size()) != h.dim)
        throw dimension_mismatch("char_zero_divisor_system: dimensions differ");
    HalfspaceSystem out;
    out.dim = h.dim;
    out.rows.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        Int v = dot(u, row.normal);
        out.rows.push_back({row.normal, v > 0 ? Rat(v) : Rat(0)});
    }
    return out;
}

HalfspaceSystem divisor_shift_system(const HalfspaceSystem& h, const LatticePoint& u, const Int& a) {
    if (static_cast<int>(u.size()) != h.dim)
        throw dimension_mismatch("divisor_shift_system: dimensions differ");
    if (a < 0) throw input_error("divisor_shift_system: shift must be nonnegative");
    HalfspaceSystem out;
    out.dim = h.dim;
    out.rows.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        Int v = dot(u, row.normal);
        Rat drop = v > 0 ? Rat(a * v) : Rat(0);
        out.rows.push_back({row.normal, row.offset - drop});
    }
    return out;
}

LatticePolytope project(const LatticePolytope& p, int drop_axis) {
    if (p.dim() < 2) throw input_error("project: requires dimension at least 2");
    if (drop_axis < 1 || drop_axis > p.dim()) throw input_error("project: axis out of range");
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        LatticePoint q;
        q.reserve(v.size() - 1);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j + 1 != static_cast<std::size_t>(drop_axis)) q.push_back(v[j]);
        pts.push_back(std::move(q));
    }
    return LatticePolytope(std::move(pts));
}

namespace {

template <typename Point>
Rat width_impl(const std::vector<Point>& vertices, int dim, int axis) {
    if (axis < 1 || axis > dim) throw input_error("width: axis out of range");
    Rat mn(vertices[0][axis - 1]), mx(vertices[0][axis - 1]);
    for (const auto& v : vertices) {
        Rat x(v[axis - 1]);
        if (x < mn) mn = x;
        if (x > mx) mx = x;
    }
    return mx - mn;
}

}  // namespace

Rat width(const LatticePolytope& p, int axis) { return width_impl(p.vertices(), p.dim(), axis); }

Rat width(const RationalPolytope& p, int axis) { return width_impl(p.vertices(), p.dim(), axis); }

}  // namespace toric
