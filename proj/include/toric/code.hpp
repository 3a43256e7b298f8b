#ifndef TORIC_CODE_HPP
#define TORIC_CODE_HPP

#include "toric/field.hpp"
#include "toric/geometry.hpp"

#include <utility>
#include <vector>

namespace toric {

// Coordinatewise representative of u modulo q-1 inside {0,...,q-2}^r,
// correct for negative coordinates.
LatticePoint reduce_exponent(const LatticePoint& u, long long q);

// One residue class of exponents: the representative c in {0,...,q-2}^r and
// every source point of P that reduces to it.
struct ReducedExponent {
    LatticePoint c;
    std::vector<LatticePoint> sources;  // lexicographically sorted

    bool operator==(const ReducedExponent&) const = default;
};

// Groups the given exponents (resp. the lattice points of P) by reduced
// exponent; classes ordered lexicographically by representative.
std::vector<ReducedExponent> reduced_set(const std::vector<LatticePoint>& points, long long q);
std::vector<ReducedExponent> reduced_set(const LatticePolytope& p, long long q,
                                         const Guards& guards = {});

// Basis of the kernel of the evaluation map: for every class, each
// non-representative source u paired with the class representative u',
// encoding the function chi^u - chi^u'.
struct KernelBasis {
    std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
};

KernelBasis kernel_basis(const std::vector<LatticePoint>& points, long long q);
KernelBasis kernel_basis(const LatticePolytope& p, long long q, const Guards& guards = {});

// True iff every reduced class is a singleton (the evaluation map is
// injective and k equals the lattice-point count).
bool injectivity_check(const LatticePolytope& p, long long q, const Guards& guards = {});

// Evaluation code of a polytope: one generator row per reduced exponent,
// evaluated at every torus point in canonical order. Generator entries are
// never zero, and the row rank is verified to be k at build time.
class ToricCode {
public:
    ToricCode(GaloisField field, LatticePolytope polytope, std::vector<ReducedExponent> reduced,
              long long n, std::vector<FieldElement> generator);

    const GaloisField& field() const { return field_; }
    const LatticePolytope& polytope() const { return polytope_; }
    const std::vector<ReducedExponent>& reduced() const { return reduced_; }
    long long n() const { return n_; }
    long long k() const { return static_cast<long long>(reduced_.size()); }
    int r() const { return polytope_.dim(); }

    const std::vector<FieldElement>& generator() const { return gen_; }
    FieldElement at(std::size_t row, std::size_t col) const { return gen_[row * n_ + col]; }

private:
    GaloisField field_;
    LatticePolytope polytope_;
    std::vector<ReducedExponent> reduced_;
    long long n_;
    std::vector<FieldElement> gen_;
};

ToricCode build_code(const LatticePolytope& p, const GaloisField& field, const Guards& guards = {});

// Checks that shifting any torus coordinate by the field generator maps the
// code onto itself. Structurally always true; exposed as a diagnostic.
bool multicyclic_check(const ToricCode& code);

}  // namespace toric

#endif
