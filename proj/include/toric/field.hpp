#ifndef TORIC_FIELD_HPP
#define TORIC_FIELD_HPP

#include "toric/errors.hpp"
#include "toric/guards.hpp"
#include "toric/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace toric {

// Element of GF(q), stored as the integer in [0, q) whose base-p digits are
// the coefficients of the residue polynomial (prime fields: the residue).
struct FieldElement {
    std::uint16_t enc = 0;

    auto operator<=>(const FieldElement&) const = default;
};

// GF(p^m) with a deterministic representation: the modulus is the
// lexicographically smallest monic irreducible of degree m over GF(p)
// (coefficients compared low-degree first) and the generator is the smallest
// encoding that is primitive. Immutable after construction; all operations
// are table lookups plus modular arithmetic on exponents.
class GaloisField {
public:
    GaloisField(long long p, int m, const Guards& guards = {});

    long long p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }  // low-degree first, monic

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement generator() const { return gen_; }
    FieldElement element(long long encoding) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long long e) const;

    // g^e with the exponent reduced modulo q-1 (negative exponents allowed).
    FieldElement exp(long long e) const;
    long long log(FieldElement a) const;  // discrete log of a nonzero element

    bool operator==(const GaloisField& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    long long p_;
    int m_;
    long long q_;
    std::vector<int> modulus_;
    FieldElement gen_;
    std::vector<std::uint16_t> exp_;        // size q-1
    std::vector<long long> log_;            // size q, log_[0] unused
    std::vector<std::uint16_t> add_;        // q x q addition table
};

// Point of the torus (F_q^*)^r, stored through the discrete logs of its
// coordinates; every coordinate is nonzero by construction.
struct TorusPoint {
    std::vector<int> logs;

    bool operator==(const TorusPoint&) const = default;
};

// Number of torus points (q-1)^r, guarded.
long long torus_size(const GaloisField& f, int r, const Guards& guards = {});

// index-th torus point in the canonical order: lexicographic by log vector.
TorusPoint torus_point_at(const GaloisField& f, int r, long long index);

std::vector<TorusPoint> torus_points(const GaloisField& f, int r, const Guards& guards = {});

// chi^u(t) = t_1^{u_1} ... t_r^{u_r}; exponents reduce mod q-1 on the torus,
// so arbitrary (including negative) integer exponents are fine.
FieldElement eval_monomial(const GaloisField& f, const LatticePoint& u, const TorusPoint& t);

// Rank of a row-major matrix over the field by exact Gaussian elimination.
std::size_t gf_rank(const GaloisField& f, std::vector<FieldElement> rows_data, std::size_t rows,
                    std::size_t cols);

// Row-echelon form holder used for row-space membership tests.
class GfEchelon {
public:
    GfEchelon(const GaloisField& f, std::size_t cols);
    void insert(std::vector<FieldElement> row);  // reduces and keeps if independent
    bool contains(std::vector<FieldElement> row) const;  // reduces to zero?
    std::size_t rank() const { return rows_.size(); }

private:
    const GaloisField& f_;
    std::size_t cols_;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<std::size_t> pivots_;
};

// Factors q into (p, m) with p prime; input_error when q is not a prime power.
std::pair<long long, int> factor_prime_power(long long q);

}  // namespace toric

#endif
