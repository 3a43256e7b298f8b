#include "toric/code.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace toric {

LatticePoint reduce_exponent(const LatticePoint& u, long long q) {
    if (q < 2) throw input_error("reduce_exponent: q must be at least 2");
    const long long qm1 = q - 1;
    LatticePoint c(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Int red = u[i] % qm1;
        if (red < 0) red += qm1;
        c[i] = red;
    }
    return c;
}

std::vector<ReducedExponent> reduced_set(const std::vector<LatticePoint>& points, long long q) {
    std::map<LatticePoint, std::vector<LatticePoint>> classes;
    for (const auto& u : points) classes[reduce_exponent(u, q)].push_back(u);
    std::vector<ReducedExponent> out;
    out.reserve(classes.size());
    for (auto& [c, sources] : classes) {
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
        out.push_back({c, std::move(sources)});
    }
    return out;  // map iteration is lexicographic in c
}

std::vector<ReducedExponent> reduced_set(const LatticePolytope& p, long long q, const Guards& guards) {
    return reduced_set(lattice_points(p, guards), q);
}

KernelBasis kernel_basis(const std::vector<LatticePoint>& points, long long q) {
    KernelBasis basis;
    for (const auto& cls : reduced_set(points, q))
        for (std::size_t i = 1; i < cls.sources.size(); ++i)
            basis.pairs.emplace_back(cls.sources[i], cls.sources[0]);
    return basis;
}

KernelBasis kernel_basis(const LatticePolytope& p, long long q, const Guards& guards) {
    return kernel_basis(lattice_points(p, guards), q);
}

bool injectivity_check(const LatticePolytope& p, long long q, const Guards& guards) {
    for (const auto& cls : reduced_set(p, q, guards))
        if (cls.sources.size() > 1) return false;
    return true;
}

ToricCode::ToricCode(GaloisField field, LatticePolytope polytope,
                     std::vector<ReducedExponent> reduced, long long n,
                     std::vector<FieldElement> generator)
    : field_(std::move(field)),
      polytope_(std::move(polytope)),
      reduced_(std::move(reduced)),
      n_(n),
      gen_(std::move(generator)) {}

ToricCode build_code(const LatticePolytope& p, const GaloisField& field, const Guards& guards) {
    const int r = p.dim();
    if (r < 2) throw input_error("build_code: requires dimension at least 2");
    auto reduced = reduced_set(p, field.q(), guards);
    const long long n = torus_size(field, r, guards);
    const auto k = reduced.size();

    std::vector<FieldElement> gen(k * n);
    const long long qm1 = field.q() - 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long long> exps(r);
        for (int j = 0; j < r; ++j) exps[j] = static_cast<long long>(reduced[i].c[j]);
        for (long long col = 0; col < n; ++col) {
            TorusPoint t = torus_point_at(field, r, col);
            long long e = 0;
            for (int j = 0; j < r; ++j) e = (e + exps[j] * t.logs[j]) % qm1;
            gen[i * n + col] = field.exp(e);
        }
    }

    // The reduced rows are guaranteed independent; a rank defect here means
    // a field or ordering bug, so fail loudly.
    if (gf_rank(field, gen, k, n) != k)
        throw std::logic_error("build_code: generator rank defect");

    return ToricCode(field, p, std::move(reduced), n, std::move(gen));
}

bool multicyclic_check(const ToricCode& code) {
    const auto& f = code.field();
    const int r = code.r();
    const long long n = code.n();
    const long long qm1 = f.q() - 1;
    if (qm1 == 1) return true;  // one torus point, nothing to shift

    GfEchelon span(f, n);
    for (long long i = 0; i < code.k(); ++i) {
        std::vector<FieldElement> row(n);
        for (long long j = 0; j < n; ++j) row[j] = code.at(i, j);
        span.insert(std::move(row));
    }

    // Strides of the mixed-radix index: coordinate axis i has weight
    // (q-1)^(r-1-i) in the canonical torus order.
    std::vector<long long> weight(r, 1);
    for (int i = r - 2; i >= 0; --i) weight[i] = weight[i + 1] * qm1;

    for (int axis = 0; axis < r; ++axis) {
        for (long long i = 0; i < code.k(); ++i) {
            std::vector<FieldElement> shifted(n);
            for (long long col = 0; col < n; ++col) {
                long long digit = (col / weight[axis]) % qm1;
                long long moved = col + ((digit + 1 == qm1) ? (1 - qm1) : 1) * weight[axis];
                shifted[moved] = code.at(i, col);
            }
            if (!span.contains(std::move(shifted))) return false;
        }
    }
    return true;
}

}  // namespace toric
