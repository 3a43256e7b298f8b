#ifndef TORIC_DISTANCE_HPP
#define TORIC_DISTANCE_HPP

#include "toric/code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// Witness data of one level of the lower-bound recursion: the line-count
// bound a and the intersection number m used at that dimension.
struct LevelWitness {
    int level = 0;
    long long a = 0;
    long long m = 0;
};

// Witness of the box upper bound: anchor u and the box side lengths l.
struct BoxWitness {
    std::vector<long long> anchor;
    std::vector<long long> lengths;
};

struct DistanceReport {
    long long n = 0;
    long long k = 0;
    std::optional<long long> exact;
    std::optional<long long> lower_bound;  // reported raw, may be <= 0
    std::optional<long long> upper_bound;
    bool trivial_lower = false;            // lower_bound <= 0
    std::vector<LevelWitness> lower_levels;
    std::optional<BoxWitness> upper_witness;
};

// Minimum Hamming weight over all nonzero messages, enumerated in reflected
// Gray order so each step updates the running codeword by a single row.
// jobs = 0 means all available cores; the message space is split into
// contiguous rank ranges merged at the end.
long long exact_min_distance(const ToricCode& code, const Guards& guards = {}, int jobs = 0);

// Largest lattice fiber of a plane polytope: the extent in the first
// coordinate over points sharing the second coordinate (the orientation the
// hypercube computation pins down; the transposed variant is handled by the
// caller via coordinate swap).
long long a_bound_2d(const LatticePolytope& p, const Guards& guards = {});

struct LowerBound2d {
    long long bound = 0;
    long long a = 0;
    long long m = 0;
};

// Plane lower bound d >= (q-1)^2 - (a(q-1-m) + (q-1)m), reported raw.
// Both coordinate orientations are evaluated and the better bound returned.
LowerBound2d intersection_lower_bound_2d(const LatticePolytope& p, long long q,
                                         const Guards& guards = {});

// Dimension recursion: level r combines the intersection number
// m_r = r! V_r(P, zero-divisor polytopes) with the zeros bound of the
// projected polytope; the base case is the plane bound.
DistanceReport intersection_lower_bound(const LatticePolytope& p, long long q,
                                        const Guards& guards = {});

struct UpperBoundResult {
    long long bound = 0;
    BoxWitness witness;
};

// Smallest prod(q-1-l_i) over boxes u + prod{0..l_i} whose reduction lands
// inside the reduced set of P; searched in decreasing zero-count order.
UpperBoundResult box_upper_bound(const LatticePolytope& p, long long q, const Guards& guards = {});

struct CodeParams {
    long long n = 0, k = 0, d = 0;
};

// Closed-form parameters [(q-1)^r, prod(b_i+1), prod(q-1-b_i)] of the box
// family; requires every b_i < q-1.
CodeParams hypercube_params(const std::vector<long long>& b, long long q);

struct JoynerReport {
    long long q = 0;
    long long n = 0;
    long long k = 0;
    long long exact = 0;
    long long conjectured_bound = 0;
    bool premise_holds = false;  // conjecture 4.2: the window condition with N = q-2
    bool refuted = false;
};

// Joyner's conjecture 4.2 tested on the triangle (0,0),(1,1),(0,2):
// conjectured d >= n - 2 N vol(P) with N = q-2.
JoynerReport joyner_42_check(long long q, const Guards& guards = {});

// Joyner's conjecture 4.3 tested on the triangle (0,0),(1,0),(0,1):
// conjectured d >= n - r! #(P cap M).
JoynerReport joyner_43_check(long long q, const Guards& guards = {});

}  // namespace toric

#endif
