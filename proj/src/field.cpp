#include "toric/field.hpp"

#include <algorithm>
#include <string>

namespace toric {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), coefficients low-degree first.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return trim(std::move(c));
}

// Remainder of a modulo a monic divisor (monic, so no leading inverse).
Poly poly_mod(Poly a, const Poly& divisor, long long p) {
    a = trim(std::move(a));
    const std::size_t d = divisor.size() - 1;
    while (a.size() > d) {
        long long factor = a.back() % p;
        if (factor != 0) {
            std::size_t shift = a.size() - 1 - d;
            for (std::size_t i = 0; i <= d; ++i) {
                long long v = a[shift + i] - factor * divisor[i] % p;
                a[shift + i] = static_cast<int>(((v % p) + p) % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
    }
    return a;
}

bool divides(const Poly& divisor, const Poly& a, long long p) {
    return poly_mod(a, divisor, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& a, int deg, long long p) {
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            Poly divisor(d + 1, 0);
            long long rest = t;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (divides(divisor, a, p)) return false;
        }
    }
    return true;
}

std::vector<int> digits_of(long long enc, long long p, int m) {
    std::vector<int> d(m, 0);
    for (int i = 0; i < m && enc > 0; ++i) {
        d[i] = static_cast<int>(enc % p);
        enc /= p;
    }
    return d;
}

long long encoding_of(const Poly& a, long long p, int m) {
    long long enc = 0, weight = 1;
    for (int i = 0; i < m; ++i) {
        if (i < static_cast<int>(a.size())) enc += a[i] * weight;
        weight *= p;
    }
    return enc;
}

}  // namespace

GaloisField::GaloisField(long long p, int m, const Guards& guards) : p_(p), m_(m) {
    if (!is_prime(p)) throw input_error("field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw input_error("field: extension degree must be at least 1");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > guards.max_field_size)
            throw guard_error("field: q exceeds max_field_size (" +
                              std::to_string(guards.max_field_size) + ")");
    }
    if (q_ > 65535) throw guard_error("field: q exceeds the 16-bit element representation");

    // Lexicographically smallest (low-degree-first) monic irreducible of
    // degree m; for m = 1 this is the polynomial x.
    modulus_.assign(m + 1, 0);
    modulus_[m] = 1;
    if (m > 1) {
        long long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        bool found = false;
        for (long long t = 0; t < count && !found; ++t) {
            Poly cand(m + 1, 0);
            cand[m] = 1;
            // Decode t with a_0 as the most significant digit, so ascending t
            // walks the candidates in low-degree-first lexicographic order.
            long long tt = t;
            for (int i = m - 1; i >= 0; --i) {
                cand[i] = static_cast<int>(tt % p);
                tt /= p;
            }
            if (is_irreducible(cand, m, p)) {
                modulus_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("field: no irreducible modulus found");
    }

    auto raw_mul = [&](long long a, long long b) -> long long {
        Poly pa = digits_of(a, p_, m_), pb = digits_of(b, p_, m_);
        Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
        return encoding_of(prod, p_, m_);
    };

    // Smallest primitive encoding.
    long long g = 0;
    for (long long cand = 1; cand < q_; ++cand) {
        long long x = cand, order = 1;
        while (x != 1) {
            x = raw_mul(x, cand);
            ++order;
            if (order > q_) throw std::logic_error("field: runaway order computation");
        }
        if (order == q_ - 1) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("field: no primitive element found");
    gen_ = {static_cast<std::uint16_t>(g)};

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    long long x = 1;
    for (long long i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<std::uint16_t>(x);
        if (log_[x] != -1) throw std::logic_error("field: generator is not primitive");
        log_[x] = i;
        x = raw_mul(x, g);
    }
    if (x != 1) throw std::logic_error("field: generator order mismatch");

    add_.resize(q_ * q_);
    for (long long a = 0; a < q_; ++a) {
        Poly pa = digits_of(a, p_, m_);
        for (long long b = 0; b <= a; ++b) {
            Poly pb = digits_of(b, p_, m_);
            Poly sum(m_, 0);
            for (int i = 0; i < m_; ++i) sum[i] = static_cast<int>((pa[i] + pb[i]) % p_);
            auto enc = static_cast<std::uint16_t>(encoding_of(sum, p_, m_));
            add_[a * q_ + b] = enc;
            add_[b * q_ + a] = enc;
        }
    }
}

FieldElement GaloisField::element(long long encoding) const {
    if (encoding < 0 || encoding >= q_)
        throw input_error("field: encoding " + std::to_string(encoding) + " out of range");
    return {static_cast<std::uint16_t>(encoding)};
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
    return {add_[static_cast<std::size_t>(a.enc) * q_ + b.enc]};
}

FieldElement GaloisField::neg(FieldElement a) const {
    if (a.enc == 0) return a;
    // Digit-wise negation: p - digit for each nonzero digit.
    long long enc = a.enc, out = 0, weight = 1;
    for (int i = 0; i < m_; ++i) {
        long long digit = enc % p_;
        if (digit != 0) out += (p_ - digit) * weight;
        enc /= p_;
        weight *= p_;
    }
    return {static_cast<std::uint16_t>(out)};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
    if (a.enc == 0 || b.enc == 0) return {0};
    long long e = log_[a.enc] + log_[b.enc];
    if (e >= q_ - 1) e -= q_ - 1;
    return {exp_[e]};
}

FieldElement GaloisField::inv(FieldElement a) const {
    if (a.enc == 0) throw input_error("field: inversion of zero");
    long long e = (q_ - 1 - log_[a.enc]) % (q_ - 1);
    return {exp_[e]};
}

FieldElement GaloisField::pow(FieldElement a, long long e) const {
    if (a.enc == 0) {
        if (e > 0) return {0};
        if (e == 0) return {1};
        throw input_error("field: inversion of zero");
    }
    long long qm1 = q_ - 1;
    long long er = ((e % qm1) + qm1) % qm1;
    return {exp_[(log_[a.enc] * er) % qm1]};
}

FieldElement GaloisField::exp(long long e) const {
    long long qm1 = q_ - 1;
    long long er = ((e % qm1) + qm1) % qm1;
    return {exp_[er]};
}

long long GaloisField::log(FieldElement a) const {
    if (a.enc == 0) throw input_error("field: log of zero");
    return log_[a.enc];
}

long long torus_size(const GaloisField& f, int r, const Guards& guards) {
    if (r < 1) throw input_error("torus: dimension must be at least 1");
    Int total = 1;
    for (int i = 0; i < r; ++i) total *= f.q() - 1;
    if (total > guards.max_torus_points)
        throw guard_error("torus: (q-1)^r exceeds max_torus_points (" +
                          std::to_string(guards.max_torus_points) + ")");
    return static_cast<long long>(total);
}

TorusPoint torus_point_at(const GaloisField& f, int r, long long index) {
    const long long base = f.q() - 1;
    TorusPoint t;
    t.logs.assign(r, 0);
    for (int i = r - 1; i >= 0; --i) {
        t.logs[i] = static_cast<int>(index % base);
        index /= base;
    }
    return t;
}

std::vector<TorusPoint> torus_points(const GaloisField& f, int r, const Guards& guards) {
    const long long n = torus_size(f, r, guards);
    std::vector<TorusPoint> out;
    out.reserve(n);
    for (long long i = 0; i < n; ++i) out.push_back(torus_point_at(f, r, i));
    return out;
}

FieldElement eval_monomial(const GaloisField& f, const LatticePoint& u, const TorusPoint& t) {
    if (u.size() != t.logs.size()) throw dimension_mismatch("eval_monomial: dimensions differ");
    const long long qm1 = f.q() - 1;
    if (qm1 == 1) return f.one();
    long long e = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Int red = u[i] % qm1;
        if (red < 0) red += qm1;
        e = (e + static_cast<long long>(red) * t.logs[i]) % qm1;
    }
    return f.exp(e);
}

std::size_t gf_rank(const GaloisField& f, std::vector<FieldElement> data, std::size_t rows,
                    std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && data[pivot * cols + col].enc == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(data[pivot * cols + j], data[r * cols + j]);
        FieldElement pinv = f.inv(data[r * cols + col]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (data[i * cols + col].enc == 0) continue;
            FieldElement factor = f.mul(data[i * cols + col], pinv);
            for (std::size_t j = col; j < cols; ++j)
                data[i * cols + j] = f.sub(data[i * cols + j], f.mul(factor, data[r * cols + j]));
        }
        ++r;
    }
    return r;
}

GfEchelon::GfEchelon(const GaloisField& f, std::size_t cols) : f_(f), cols_(cols) {}

void GfEchelon::insert(std::vector<FieldElement> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (row[pivots_[i]].enc == 0) continue;
        FieldElement factor = row[pivots_[i]];
        for (std::size_t j = 0; j < cols_; ++j) row[j] = f_.sub(row[j], f_.mul(factor, rows_[i][j]));
    }
    std::size_t lead = 0;
    while (lead < cols_ && row[lead].enc == 0) ++lead;
    if (lead == cols_) return;
    FieldElement pinv = f_.inv(row[lead]);
    for (std::size_t j = 0; j < cols_; ++j) row[j] = f_.mul(row[j], pinv);
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
}

bool GfEchelon::contains(std::vector<FieldElement> row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (row[pivots_[i]].enc == 0) continue;
        FieldElement factor = row[pivots_[i]];
        for (std::size_t j = 0; j < cols_; ++j) row[j] = f_.sub(row[j], f_.mul(factor, rows_[i][j]));
    }
    return std::all_of(row.begin(), row.end(), [](FieldElement x) { return x.enc == 0; });
}

std::pair<long long, int> factor_prime_power(long long q) {
    if (q < 2) throw input_error("field: q must be at least 2");
    long long p = q;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw input_error("field: " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

}  // namespace toric
