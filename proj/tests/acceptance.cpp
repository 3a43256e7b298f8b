// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "toric/verify.hpp"

#include <chrono>
#include <iostream>
#include <map>

int main() {
    using namespace toric::verify;
    using clock = std::chrono::steady_clock;

    Options opt;
    Stats stats;

    struct Criterion {
        std::string title;
        std::vector<CheckResult> results;
        double seconds = 0;
    };
    std::map<int, Criterion> table;
    table[1].title = "hypercube family: k, exact d, both bounds equal the closed form";
    table[2].title = "hexagon b=1 q=5: k=7, bounds 4/8, chain 4<8<9, exact baseline";
    table[3].title = "joyner 4.2 refutation at q=5";
    table[4].title = "joyner 4.3 refutation at q=8";
    table[5].title = "pick identity on 200 random plane polytopes";
    table[6].title = "mixed-volume properties on random polytopes";
    table[7].title = "rank and kernel on random sub-polytopes";
    table[8].title = "bound sandwich on brute-forceable instances";
    table[9].title = "multicyclicity of every built code";

    auto timed = [&](auto&& fn) {
        auto start = clock::now();
        auto results = fn();
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        for (auto& r : results) {
            table[r.criterion].results.push_back(r);
            table[r.criterion].seconds += secs / static_cast<double>(results.size());
        }
    };

    timed([&] { return check_hypercube(stats, opt); });
    timed([&] { return check_hexagon(stats, opt); });
    timed([&] { return check_joyner42(stats, opt); });
    timed([&] { return check_joyner43(stats, opt); });
    timed([&] { return check_pick(opt); });
    timed([&] { return check_mixed_volume(opt); });
    timed([&] { return check_rank_kernel_sandwich(stats, opt); });
    timed([&] { return std::vector<CheckResult>{check_multicyclic_summary(stats)}; });

    bool all_pass = true;
    for (const auto& [id, crit] : table) {
        bool pass = !crit.results.empty();
        int failed = 0;
        for (const auto& r : crit.results)
            if (!r.pass) {
                pass = false;
                ++failed;
            }
        all_pass = all_pass && pass;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << crit.title
                  << " (" << crit.results.size() << " checks";
        if (failed) std::cout << ", " << failed << " FAILED";
        std::cout << ", " << crit.seconds << "s)\n";
        if (failed)
            for (const auto& r : crit.results)
                if (!r.pass) std::cout << "       failed: " << r.detail << "\n";
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES present\n");
    return all_pass ? 0 : 1;
}
