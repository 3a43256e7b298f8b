#ifndef TORIC_GUARDS_HPP
#define TORIC_GUARDS_HPP

namespace toric {

// Size limits that route oversized computations into clean guard errors
// instead of runaway enumeration. Defaults keep every operation at desk
// scale; the CLI can widen them.
struct Guards {
    long long max_field_size = 256;            // q = p^m
    long long max_lattice_points = 10'000'000; // bounding-box cells scanned
    long long max_torus_points = 10'000'000;   // (q-1)^r codeword coordinates
    long long max_messages = 100'000'000;      // q^k - 1 brute-force messages
    long long max_box_tests = 10'000'000;      // membership tests in the box search
    int max_dim = 4;                           // geometry operations cap
};

}  // namespace toric

#endif
