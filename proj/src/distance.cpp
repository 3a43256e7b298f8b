#include "toric/distance.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <thread>

namespace toric {

namespace {

Int int_pow(long long base, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

long long checked_ll(const Int& v, const char* what) {
    if (v > std::numeric_limits<long long>::max())
        throw guard_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<long long>(v);
}

// Reflected mixed-radix Gray word of the given rank: consecutive ranks
// differ in exactly one digit.
void gray_digits(long long rank, int k, long long q, std::vector<int>& out) {
    static thread_local std::vector<int> base;
    base.assign(k, 0);
    for (int i = k - 1; i >= 0; --i) {
        base[i] = static_cast<int>(rank % q);
        rank /= q;
    }
    long long prefix = 0;
    for (int i = 0; i < k; ++i) {
        out[i] = (prefix % 2 == 0) ? base[i] : static_cast<int>(q - 1 - base[i]);
        prefix += base[i];
    }
}

struct ZerosBound {
    long long zeros = 0;
    std::vector<LevelWitness> levels;
};

long long lattice_segment_length(const LatticePolytope& p, const Guards& guards) {
    return static_cast<long long>(lattice_points(p, guards).size()) - 1;
}

// Zeros bound for one line-fixing orientation of a full-dimensional plane
// polytope: a from the lattice fibers, m from the unshifted intersection
// number 2 V_2(P, P_(div chi^e1)_0). Mixed volumes are monotone, so the
// unshifted number dominates every divisor-shifted one and the affine form
// below is maximized at the fiber bound.
LowerBound2d zeros_2d_oriented(const LatticePolytope& p, long long q, const Guards& guards) {
    auto h = facet_representation(p);
    LatticePoint e1{Int(1), Int(0)};
    auto zero_divisor = vertex_enumeration(char_zero_divisor_system(h, e1));
    Rat m_rat = 2 * mixed_volume(std::vector<RationalPolytope>{RationalPolytope(p), zero_divisor});
    long long m = checked_ll(rat_ceil(m_rat), "intersection number");
    long long a = a_bound_2d(p, guards);
    long long m_eff = std::min(m, q - 1);
    LowerBound2d out;
    out.a = a;
    out.m = m;
    out.bound = a * (q - 1 - m_eff) + (q - 1) * m_eff;  // zeros, not yet a distance
    return out;
}

LatticePolytope swap_axes_2d(const LatticePolytope& p) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back({v[1], v[0]});
    return LatticePolytope(std::move(pts));
}

ZerosBound zeros_bound_2d(const LatticePolytope& p, long long q, const Guards& guards) {
    ZerosBound out;
    if (p.affine_dim() == 0) {
        out.zeros = 0;
        out.levels.push_back({2, 0, 0});
        return out;
    }
    if (p.affine_dim() == 1) {
        // Monomial times a univariate polynomial in a primitive character:
        // each root wipes out one coset of q-1 points.
        long long a = std::min(lattice_segment_length(p, guards), q - 1);
        out.zeros = a * (q - 1);
        out.levels.push_back({2, a, 0});
        return out;
    }
    LowerBound2d first = zeros_2d_oriented(p, q, guards);
    LowerBound2d second = zeros_2d_oriented(swap_axes_2d(p), q, guards);
    const LowerBound2d& best = second.bound < first.bound ? second : first;
    out.zeros = best.bound;
    out.levels.push_back({2, best.a, best.m});
    return out;
}

ZerosBound zeros_bound(const LatticePolytope& p, long long q, const Guards& guards) {
    const int r = p.dim();
    if (r == 2) return zeros_bound_2d(p, q, guards);

    ZerosBound out;
    long long lines = checked_ll(int_pow(q - 1, r - 1), "line count");
    if (p.affine_dim() == 0) {
        out.zeros = 0;
        out.levels.push_back({r, 0, 0});
        return out;
    }
    if (p.affine_dim() == 1) {
        long long a = std::min(lattice_segment_length(p, guards), q - 1);
        out.zeros = a * lines;
        out.levels.push_back({r, a, 0});
        return out;
    }
    if (p.affine_dim() < r) {
        // Intermediate-dimensional polytopes have no facet description in
        // this ambient space; fall back to the always-valid d >= 1.
        out.zeros = checked_ll(int_pow(q - 1, r), "torus size") - 1;
        return out;
    }

    auto h = facet_representation(p);
    std::vector<RationalPolytope> bodies{RationalPolytope(p)};
    for (int axis = 1; axis < r; ++axis) {
        LatticePoint u(r, Int(0));
        u[axis - 1] = 1;
        bodies.push_back(vertex_enumeration(char_zero_divisor_system(h, u)));
    }
    Int factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    Rat m_rat = Rat(factorial) * mixed_volume(bodies);
    long long m = checked_ll(rat_ceil(m_rat), "intersection number");

    ZerosBound sub = zeros_bound(project(p, r), q, guards);
    long long a = std::clamp(sub.zeros, 0LL, lines);
    long long m_eff = std::min(m, q - 1);

    out.zeros = a * (q - 1) + (lines - a) * m_eff;
    out.levels = std::move(sub.levels);
    out.levels.push_back({r, a, m});
    return out;
}

}  // namespace

long long exact_min_distance(const ToricCode& code, const Guards& guards, int jobs) {
    const GaloisField& f = code.field();
    const long long q = f.q();
    const int k = static_cast<int>(code.k());
    const long long n = code.n();

    Int total_big = int_pow(q, k);
    if (total_big - 1 > guards.max_messages)
        throw guard_error("exact_min_distance: q^k-1 exceeds max_messages (" +
                          std::to_string(guards.max_messages) + ")");
    const long long total = static_cast<long long>(total_big);

    // Logs of the generator entries (all nonzero) plus a doubled exponent
    // table make the inner update one add-table lookup per column.
    const long long qm1 = q - 1;
    std::vector<long long> rowlog(static_cast<std::size_t>(k) * n);
    for (int i = 0; i < k; ++i)
        for (long long j = 0; j < n; ++j) rowlog[i * n + j] = f.log(code.at(i, j));
    std::vector<FieldElement> exp2(2 * qm1);
    for (long long e = 0; e < 2 * qm1; ++e) exp2[e] = f.exp(e);

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    long long messages = total - 1;
    if (messages < workers) workers = static_cast<int>(messages);

    std::vector<long long> minima(workers, std::numeric_limits<long long>::max());
    auto run = [&](int w, long long lo, long long hi) {
        std::vector<int> cur(k), nxt(k);
        std::vector<FieldElement> cw(n, FieldElement{0});
        gray_digits(lo, k, q, cur);
        for (int i = 0; i < k; ++i) {
            if (cur[i] == 0) continue;
            long long dlog = f.log(f.element(cur[i]));
            for (long long j = 0; j < n; ++j)
                cw[j] = f.add(cw[j], exp2[dlog + rowlog[i * n + j]]);
        }
        long long best = std::numeric_limits<long long>::max();
        auto weigh = [&]() {
            long long w2 = 0;
            for (long long j = 0; j < n; ++j)
                if (cw[j].enc != 0) ++w2;
            return w2;
        };
        best = std::min(best, weigh());
        for (long long rank = lo + 1; rank < hi; ++rank) {
            gray_digits(rank, k, q, nxt);
            int changed = 0;
            while (nxt[changed] == cur[changed]) ++changed;
            FieldElement delta = f.sub(f.element(nxt[changed]), f.element(cur[changed]));
            long long dlog = f.log(delta);
            const long long* rl = rowlog.data() + static_cast<std::size_t>(changed) * n;
            for (long long j = 0; j < n; ++j) cw[j] = f.add(cw[j], exp2[dlog + rl[j]]);
            std::swap(cur, nxt);
            best = std::min(best, weigh());
        }
        minima[w] = best;
    };

    if (workers == 1) {
        run(0, 1, total);
    } else {
        std::vector<std::thread> pool;
        long long chunk = messages / workers, extra = messages % workers, lo = 1;
        for (int w = 0; w < workers; ++w) {
            long long hi = lo + chunk + (w < extra ? 1 : 0);
            pool.emplace_back(run, w, lo, hi);
            lo = hi;
        }
        for (auto& t : pool) t.join();
    }
    return *std::min_element(minima.begin(), minima.end());
}

long long a_bound_2d(const LatticePolytope& p, const Guards& guards) {
    if (p.dim() != 2) throw input_error("a_bound_2d: requires a plane polytope");
    std::map<Int, std::pair<Int, Int>> fibers;  // second coordinate -> first-extent
    for (const auto& u : lattice_points(p, guards)) {
        auto it = fibers.find(u[1]);
        if (it == fibers.end())
            fibers.emplace(u[1], std::make_pair(u[0], u[0]));
        else {
            it->second.first = std::min(it->second.first, u[0]);
            it->second.second = std::max(it->second.second, u[0]);
        }
    }
    Int best = 0;
    for (const auto& [y, extent] : fibers) best = std::max(best, Int(extent.second - extent.first));
    return checked_ll(best, "a_bound_2d");
}

LowerBound2d intersection_lower_bound_2d(const LatticePolytope& p, long long q,
                                         const Guards& guards) {
    if (p.dim() != 2) throw input_error("intersection_lower_bound_2d: requires a plane polytope");
    ZerosBound z = zeros_bound_2d(p, q, guards);
    LowerBound2d out;
    out.bound = (q - 1) * (q - 1) - z.zeros;
    out.a = z.levels.back().a;
    out.m = z.levels.back().m;
    return out;
}

DistanceReport intersection_lower_bound(const LatticePolytope& p, long long q,
                                        const Guards& guards) {
    const int r = p.dim();
    if (r < 2) throw input_error("intersection_lower_bound: requires dimension at least 2");
    if (r > guards.max_dim)
        throw guard_error("intersection_lower_bound: dimension exceeds the cap of " +
                          std::to_string(guards.max_dim));
    DistanceReport report;
    Int n_big = int_pow(q - 1, r);
    if (n_big > guards.max_torus_points)
        throw guard_error("intersection_lower_bound: (q-1)^r exceeds max_torus_points (" +
                          std::to_string(guards.max_torus_points) + ")");
    report.n = static_cast<long long>(n_big);
    ZerosBound z = zeros_bound(p, q, guards);
    report.lower_bound = report.n - z.zeros;
    report.trivial_lower = *report.lower_bound <= 0;
    report.lower_levels = std::move(z.levels);
    return report;
}

UpperBoundResult box_upper_bound(const LatticePolytope& p, long long q, const Guards& guards) {
    const int r = p.dim();
    const long long qm1 = q - 1;
    Int grid_big = int_pow(qm1, r);
    if (grid_big > guards.max_torus_points)
        throw guard_error("box_upper_bound: reduced grid exceeds max_torus_points");
    const long long grid = static_cast<long long>(grid_big);

    auto classes = reduced_set(p, q, guards);
    std::vector<std::vector<long long>> anchors;
    std::vector<char> member(grid, 0);
    auto index_of = [&](const std::vector<long long>& c) {
        long long idx = 0;
        for (int j = 0; j < r; ++j) idx = idx * qm1 + c[j];
        return idx;
    };
    for (const auto& cls : classes) {
        std::vector<long long> c(r);
        for (int j = 0; j < r; ++j) c[j] = static_cast<long long>(cls.c[j]);
        member[index_of(c)] = 1;
        anchors.push_back(std::move(c));
    }

    // Candidate side-length vectors, largest zero count (smallest residual
    // product) first; the first admissible candidate is optimal.
    std::vector<std::vector<long long>> candidates;
    std::vector<long long> l(r, 0);
    Int work_estimate = 0;
    while (true) {
        Int boxpts = 1;
        for (int j = 0; j < r; ++j) boxpts *= l[j] + 1;
        work_estimate += boxpts * static_cast<long long>(anchors.size());
        candidates.push_back(l);
        int j = r - 1;
        while (j >= 0 && l[j] == qm1 - 1) l[j--] = 0;
        if (j < 0) break;
        ++l[j];
    }
    if (work_estimate > guards.max_box_tests) {
        // Degrade to axis-aligned segments; still a valid upper bound.
        candidates.clear();
        candidates.emplace_back(r, 0);
        for (int axis = 0; axis < r; ++axis)
            for (long long len = 1; len <= qm1 - 1; ++len) {
                std::vector<long long> seg(r, 0);
                seg[axis] = len;
                candidates.push_back(std::move(seg));
            }
    }
    auto residual = [&](const std::vector<long long>& lv) {
        long long prod = 1;
        for (int j = 0; j < r; ++j) prod *= q - 1 - lv[j];
        return prod;
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](const std::vector<long long>& x, const std::vector<long long>& y) {
                  long long rx = residual(x), ry = residual(y);
                  if (rx != ry) return rx < ry;
                  return x > y;  // ties: earlier axes stretched first
              });

    std::vector<long long> probe(r);
    for (const auto& cand : candidates) {
        for (const auto& anchor : anchors) {
            bool ok = true;
            std::vector<long long> x(r, 0);
            while (ok) {
                for (int j = 0; j < r; ++j) {
                    probe[j] = anchor[j] + x[j];
                    if (probe[j] >= qm1) probe[j] -= qm1;
                }
                if (!member[index_of(probe)]) ok = false;
                int j = r - 1;
                while (j >= 0 && x[j] == cand[j]) x[j--] = 0;
                if (j < 0) break;
                ++x[j];
            }
            if (ok) {
                UpperBoundResult out;
                out.bound = residual(cand);
                out.witness.anchor = anchor;
                out.witness.lengths = cand;
                return out;
            }
        }
    }
    throw std::logic_error("box_upper_bound: no admissible box (empty reduced set?)");
}

CodeParams hypercube_params(const std::vector<long long>& b, long long q) {
    if (b.empty()) throw input_error("hypercube_params: empty side vector");
    CodeParams out;
    Int n = 1, k = 1, d = 1;
    for (long long bi : b) {
        if (bi < 0) throw input_error("hypercube_params: negative side");
        if (bi >= q - 1) throw input_error("hypercube_params: requires b_i < q-1");
        n *= q - 1;
        k *= bi + 1;
        d *= q - 1 - bi;
    }
    out.n = checked_ll(n, "hypercube n");
    out.k = checked_ll(k, "hypercube k");
    out.d = checked_ll(d, "hypercube d");
    return out;
}

namespace {

JoynerReport joyner_common(long long q, const LatticePolytope& p, const Guards& guards) {
    if (q < 3) throw input_error("joyner check: requires q >= 3");
    auto [pp, mm] = factor_prime_power(q);
    GaloisField field(pp, mm, guards);
    ToricCode code = build_code(p, field, guards);
    JoynerReport report;
    report.q = q;
    report.n = code.n();
    report.k = code.k();
    report.exact = exact_min_distance(code, guards);
    return report;
}

}  // namespace

JoynerReport joyner_42_check(long long q, const Guards& guards) {
    LatticePolytope p({{Int(0), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(2)}});
    JoynerReport report = joyner_common(q, p, guards);

    Rat vol = volume(p);
    long long big_n = q - 2;
    Rat lhs = Rat(2 * big_n) * vol;
    Rat rhs = Rat(2 * big_n * big_n) * vol;
    report.premise_holds = big_n > 1 && lhs <= Rat(report.n) && Rat(report.n) <= rhs;
    Rat bound = Rat(report.n) - Rat(2 * big_n) * vol;
    report.conjectured_bound = checked_ll(rat_floor(bound), "conjectured bound");
    report.refuted = report.premise_holds && report.conjectured_bound > report.exact;
    return report;
}

JoynerReport joyner_43_check(long long q, const Guards& guards) {
    LatticePolytope p({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}});
    JoynerReport report = joyner_common(q, p, guards);

    long long points = static_cast<long long>(lattice_points(p, guards).size());
    report.premise_holds = true;  // strictly convex support function on this fan
    report.conjectured_bound = report.n - 2 * points;
    report.refuted = report.conjectured_bound > report.exact;
    return report;
}

}  // namespace toric
