#ifndef TORIC_VERIFY_HPP
#define TORIC_VERIFY_HPP

#include "toric/distance.hpp"

#include <string>
#include <vector>

namespace toric::verify {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    Guards guards;
    long long brute_cap = 2'000'000;  // q^k ceiling for sandwich brute force
    int jobs = 0;
};

// Every code built while verifying runs the multicyclic diagnostic; the
// tallies feed the final summary check.
struct Stats {
    long long codes_checked = 0;
    long long multicyclic_failures = 0;
};

std::vector<CheckResult> check_hypercube(Stats& stats, const Options& opt = {});
std::vector<CheckResult> check_hexagon(Stats& stats, const Options& opt = {});
std::vector<CheckResult> check_joyner42(Stats& stats, const Options& opt = {});
std::vector<CheckResult> check_joyner43(Stats& stats, const Options& opt = {});
std::vector<CheckResult> check_pick(const Options& opt = {});
std::vector<CheckResult> check_mixed_volume(const Options& opt = {});
std::vector<CheckResult> check_rank_kernel_sandwich(Stats& stats, const Options& opt = {});
CheckResult check_multicyclic_summary(const Stats& stats);

// name: one of hypercube, hexagon, joyner42, joyner43, pick, all.
// Throws input_error for unknown names.
std::vector<CheckResult> run_case(const std::string& name, const Options& opt = {});

}  // namespace toric::verify

#endif
