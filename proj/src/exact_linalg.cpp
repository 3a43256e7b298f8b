#include "exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric::detail {

namespace {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Determinant of a small integer matrix by cofactor expansion.
Int det_int(const std::vector<LatticePoint>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<LatticePoint> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            LatticePoint row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det_int(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

Rat det(QMat m) {
    const std::size_t n = m.size();
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return result;
}

int rank(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(r) < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rat>> solve_square(QMat a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<std::vector<Rat>> solve_consistent(QMat a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        std::swap(b[pivot], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

int affine_rank(const std::vector<QPoint>& pts) {
    if (pts.size() <= 1) return 0;
    QMat diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> row(pts[i].size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(row));
    }
    return rank(std::move(diffs));
}

AffineChart affine_chart(const std::vector<QPoint>& pts) {
    AffineChart chart;
    if (pts.empty()) return chart;
    chart.origin = pts[0];
    const std::size_t amb = pts[0].size();

    // Pick a maximal independent set of difference vectors.
    QMat echelon;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QPoint d(amb);
        for (std::size_t j = 0; j < amb; ++j) d[j] = pts[i][j] - chart.origin[j];
        QPoint reduced = d;
        for (const auto& row : echelon) {
            std::size_t lead = 0;
            while (lead < amb && row[lead] == 0) ++lead;
            if (lead < amb && reduced[lead] != 0) {
                Rat f = reduced[lead] / row[lead];
                for (std::size_t j = lead; j < amb; ++j) reduced[j] -= f * row[j];
            }
        }
        bool nonzero = std::any_of(reduced.begin(), reduced.end(), [](const Rat& x) { return x != 0; });
        if (nonzero) {
            chart.basis.push_back(d);
            echelon.push_back(reduced);
            std::sort(echelon.begin(), echelon.end(), [amb](const QPoint& a, const QPoint& b) {
                std::size_t la = 0, lb = 0;
                while (la < amb && a[la] == 0) ++la;
                while (lb < amb && b[lb] == 0) ++lb;
                return la < lb;
            });
        }
    }
    chart.dim = static_cast<int>(chart.basis.size());

    // Coordinates of every point in the chosen basis.
    QMat a(amb, std::vector<Rat>(chart.basis.size()));
    for (std::size_t i = 0; i < amb; ++i)
        for (std::size_t j = 0; j < chart.basis.size(); ++j) a[i][j] = chart.basis[j][i];
    chart.coords.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<Rat> b(amb);
        for (std::size_t i = 0; i < amb; ++i) b[i] = p[i] - chart.origin[i];
        auto y = solve_consistent(a, b);
        if (!y) throw std::logic_error("affine_chart: point outside affine hull");
        chart.coords.push_back(std::move(*y));
    }
    return chart;
}

LatticePoint hyperplane_normal(const std::vector<QPoint>& diffs, int dim) {
    // Clear denominators; a positive rescaling keeps the direction.
    std::vector<LatticePoint> rows;
    rows.reserve(diffs.size());
    for (const auto& d : diffs) {
        Int scale = 1;
        for (const auto& x : d) scale = scale / int_gcd(scale, rat_den(x)) * rat_den(x);
        LatticePoint row(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) row[j] = rat_num(d[j]) * (scale / rat_den(d[j]));
        rows.push_back(std::move(row));
    }
    LatticePoint normal(dim, Int(0));
    for (int j = 0; j < dim; ++j) {
        std::vector<LatticePoint> minor;
        minor.reserve(rows.size());
        for (const auto& row : rows) {
            LatticePoint m;
            m.reserve(dim - 1);
            for (int k = 0; k < dim; ++k)
                if (k != j) m.push_back(row[k]);
            minor.push_back(std::move(m));
        }
        Int d = det_int(minor);
        normal[j] = (j % 2 == 0) ? d : -d;
    }
    Int g = 0;
    for (const auto& x : normal) g = int_gcd(g, x);
    if (g > 1)
        for (auto& x : normal) x /= g;
    return normal;
}

bool point_in_hull(const QPoint& p, const std::vector<QPoint>& pts) {
    if (pts.empty()) return false;
    const std::size_t dim = p.size();
    const std::size_t m = dim + 1;          // equality rows
    const std::size_t n = pts.size();       // structural variables
    const std::size_t total = n + m;        // plus artificials

    // Tableau for phase-1 simplex on { lambda >= 0 : A lambda = b }.
    QMat t(m, std::vector<Rat>(total, Rat(0)));
    std::vector<Rat> rhs(m);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = pts[j][i];
        rhs[i] = p[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[dim][j] = 1;
    rhs[dim] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (rhs[i] < 0) {
            for (std::size_t j = 0; j < n; ++j) t[i][j] = -t[i][j];
            rhs[i] = -rhs[i];
        }
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    std::vector<Rat> cost(total, Rat(0));
    for (std::size_t j = n; j < total; ++j) cost[j] = 1;

    while (true) {
        // Bland's rule: smallest index with negative reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            Rat rc = cost[j];
            for (std::size_t i = 0; i < m; ++i)
                if (cost[basis[i]] != 0) rc -= cost[basis[i]] * t[i][j];
            if (rc < 0) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = rhs[i] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen with bounded phase-1
        Rat pv = t[leave][enter];
        for (std::size_t j = 0; j < total; ++j) t[leave][j] /= pv;
        rhs[leave] /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += rhs[i];
    return objective == 0;
}

std::vector<std::size_t> convex_cycle_2d(const std::vector<QPoint>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
                order.end());
    if (order.size() <= 2) return order;

    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
               (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
    };
    std::vector<std::size_t> hull;
    for (std::size_t idx : order) {  // lower chain
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), idx) <= 0) hull.pop_back();
        hull.push_back(idx);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {  // upper chain
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

std::vector<std::size_t> extreme_point_indices(const std::vector<QPoint>& pts) {
    if (pts.empty()) return {};
    const int d = affine_rank(pts);
    if (d == 0) return {0};
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i] < pts[lo]) lo = i;
            if (pts[i] > pts[hi]) hi = i;
        }
        return {lo, hi};
    }
    if (d == 2) {
        auto cycle = pts[0].size() == 2 ? convex_cycle_2d(pts)
                                        : convex_cycle_2d(affine_chart(pts).coords);
        std::sort(cycle.begin(), cycle.end());
        return cycle;
    }
    // General position: one exact feasibility LP per candidate.
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<QPoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!point_in_hull(pts[i], others)) out.push_back(i);
    }
    return out;
}

std::vector<FacetRow> enumerate_facets(const std::vector<QPoint>& vertices, int dim) {
    std::vector<FacetRow> rows;
    if (dim == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            if (vertices[i][0] < vertices[lo][0]) lo = i;
            if (vertices[i][0] > vertices[hi][0]) hi = i;
        }
        rows.push_back({{Int(1)}, -vertices[lo][0], {lo}});
        rows.push_back({{Int(-1)}, vertices[hi][0], {hi}});
        return rows;
    }

    const std::size_t n = vertices.size();
    std::map<std::pair<LatticePoint, Rat>, std::vector<std::size_t>> seen;
    std::vector<std::size_t> comb(dim);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    auto advance = [&]() -> bool {
        int i = dim - 1;
        while (i >= 0 && comb[i] == n - dim + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (n < static_cast<std::size_t>(dim)) return rows;
    do {
        std::vector<QPoint> diffs;
        diffs.reserve(dim - 1);
        for (int i = 1; i < dim; ++i) {
            QPoint d(dim);
            for (int j = 0; j < dim; ++j) d[j] = vertices[comb[i]][j] - vertices[comb[0]][j];
            diffs.push_back(std::move(d));
        }
        LatticePoint normal = hyperplane_normal(diffs, dim);
        if (std::all_of(normal.begin(), normal.end(), [](const Int& x) { return x == 0; })) continue;

        Rat level = 0;
        for (int j = 0; j < dim; ++j) level += vertices[comb[0]][j] * Rat(normal[j]);
        bool all_ge = true, all_le = true;
        for (const auto& v : vertices) {
            Rat val = 0;
            for (int j = 0; j < dim; ++j) val += v[j] * Rat(normal[j]);
            if (val < level) all_ge = false;
            if (val > level) all_le = false;
            if (!all_ge && !all_le) break;
        }
        if (!all_ge && !all_le) continue;
        if (all_le) {
            for (auto& x : normal) x = -x;
            level = -level;
        }
        auto key = std::make_pair(normal, -level);
        if (seen.count(key)) continue;
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            Rat val = 0;
            for (int j = 0; j < dim; ++j) val += vertices[i][j] * Rat(normal[j]);
            if (val == level) active.push_back(i);
        }
        seen.emplace(std::move(key), std::move(active));
    } while (advance());

    for (auto& [key, active] : seen) rows.push_back({key.first, key.second, std::move(active)});

    if (dim == 2) {
        // Counterclockwise from the positive x-axis.
        auto half = [](const LatticePoint& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
        std::sort(rows.begin(), rows.end(), [&](const FacetRow& a, const FacetRow& b) {
            int ha = half(a.normal), hb = half(b.normal);
            if (ha != hb) return ha < hb;
            Int cr = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
            return cr > 0;
        });
    }
    return rows;
}

std::vector<std::vector<std::size_t>> triangulate(const std::vector<QPoint>& vertices, int dim) {
    if (dim == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            if (vertices[i][0] < vertices[lo][0]) lo = i;
            if (vertices[i][0] > vertices[hi][0]) hi = i;
        }
        return {{lo, hi}};
    }
    std::vector<std::vector<std::size_t>> simplices;
    const std::size_t base = 0;
    for (const auto& facet : enumerate_facets(vertices, dim)) {
        if (std::find(facet.active.begin(), facet.active.end(), base) != facet.active.end()) continue;
        std::vector<QPoint> fpts;
        fpts.reserve(facet.active.size());
        for (std::size_t idx : facet.active) fpts.push_back(vertices[idx]);
        auto chart = affine_chart(fpts);
        for (const auto& local : triangulate(chart.coords, dim - 1)) {
            std::vector<std::size_t> simplex;
            simplex.reserve(local.size() + 1);
            simplex.push_back(base);
            for (std::size_t li : local) simplex.push_back(facet.active[li]);
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

Rat hull_volume(const std::vector<QPoint>& vertices, int dim) {
    if (vertices.empty()) return Rat(0);
    if (affine_rank(vertices) < dim) return Rat(0);
    Rat total = 0;
    Int factorial = 1;
    for (int i = 2; i <= dim; ++i) factorial *= i;
    for (const auto& simplex : triangulate(vertices, dim)) {
        QMat edges(dim, std::vector<Rat>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                edges[i][j] = vertices[simplex[i + 1]][j] - vertices[simplex[0]][j];
        Rat d = det(std::move(edges));
        if (d < 0) d = -d;
        total += d;
    }
    return total / Rat(factorial);
}

namespace {

void normalize_ineq(LinIneq& row) {
    Int scale = 1;
    for (const auto& c : row.coeff) scale = scale / int_gcd(scale, rat_den(c)) * rat_den(c);
    scale = scale / int_gcd(scale, rat_den(row.constant)) * rat_den(row.constant);
    Int g = 0;
    auto scaled = [&](const Rat& x) { return rat_num(x) * (scale / rat_den(x)); };
    for (const auto& c : row.coeff) g = int_gcd(g, scaled(c));
    g = int_gcd(g, scaled(row.constant));
    if (g == 0) return;
    for (auto& c : row.coeff) c = Rat(scaled(c) / g);
    row.constant = Rat(scaled(row.constant) / g);
}

}  // namespace

bool feasible(std::vector<LinIneq> rows, int dim) {
    for (int var = dim - 1; var >= 0; --var) {
        std::vector<LinIneq> pos, neg, next;
        for (auto& row : rows) {
            if (row.coeff[var] > 0)
                pos.push_back(std::move(row));
            else if (row.coeff[var] < 0)
                neg.push_back(std::move(row));
            else
                next.push_back(std::move(row));
        }
        for (const auto& p : pos) {
            for (const auto& ng : neg) {
                LinIneq combined;
                combined.coeff.resize(dim);
                Rat fp = -ng.coeff[var], fn = p.coeff[var];
                for (int j = 0; j < dim; ++j) combined.coeff[j] = fp * p.coeff[j] + fn * ng.coeff[j];
                combined.constant = fp * p.constant + fn * ng.constant;
                normalize_ineq(combined);
                next.push_back(std::move(combined));
            }
        }
        std::sort(next.begin(), next.end(), [](const LinIneq& a, const LinIneq& b) {
            if (a.coeff != b.coeff) return a.coeff < b.coeff;
            return a.constant < b.constant;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const LinIneq& a, const LinIneq& b) {
                                   return a.coeff == b.coeff && a.constant == b.constant;
                               }),
                   next.end());
        rows = std::move(next);
    }
    for (const auto& row : rows)
        if (row.constant < 0) return false;
    return true;
}

}  // namespace toric::detail
