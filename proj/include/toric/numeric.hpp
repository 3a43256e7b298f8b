#ifndef TORIC_NUMERIC_HPP
#define TORIC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace toric {

// Every geometric quantity in this library is exact: arbitrary-precision
// integers for lattice data and rationals everywhere a division can occur.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A point of the lattice M (or of the dual lattice N); plain vector of
// integer coordinates, compared lexicographically.
using LatticePoint = std::vector<Int>;

// A point with exact rational coordinates.
using QPoint = std::vector<Rat>;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Int rat_floor(const Rat& x) {
    Int n = rat_num(x), d = rat_den(x);  // d > 0 by cpp_rational normalization
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

inline bool is_integral(const Rat& x) { return rat_den(x) == 1; }

inline QPoint to_qpoint(const LatticePoint& p) {
    QPoint q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return q;
}

}  // namespace toric

#endif
