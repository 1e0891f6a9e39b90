// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is backed by a verification suite; the stated
// time budgets are generous on desk hardware.
#include <chrono>
#include <cstdio>
#include <string>

#include "dnq/verify.hpp"

using namespace dnq;

namespace {
double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        const char* suite;
        double budget_seconds;
    };
    const Criterion criteria[] = {
        {1, "snake: formula = recursion = enumeration (n=4,5,6; s=0,1,2)", "snake", 60},
        {2, "formula = reflection chain, all D~4 orientations, height <= 12", "cross", 120},
        {3, "formula = point-count oracle, >= 20 roots + homogeneous reps", "oracle", 600},
        {4, "homogeneous-tube identities, r <= 4, n = 4 and 5", "homog", 30},
        {5, "defect -2 middle term vs oracle", "defect2", 60},
        {6, "generalized binomial identities, exhaustive to 8", "binomial", 1},
        {7, "Euler propagation under reflections + inversion pair", "euler", 60},
        {8, "structural sanity, duality, direct sums, tube factorization", "structural", 120},
        {9, "Caldero-Chapoton map and the factorization convention", "cc", 10},
    };

    VerifyOptions opt;  // defaults: rmax 4, height 12, 2 held-out primes
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = run_verify_suite(c.suite, opt);
        double dt = seconds_since(t0);
        bool ok = r.pass && dt < c.budget_seconds;
        all_pass = all_pass && ok;
        std::printf("ACCEPTANCE %d %s: %s (%ld checks, %.2fs/%.0fs)\n", c.number,
                    c.label, ok ? "PASS" : "FAIL", r.checks, dt, c.budget_seconds);
        if (!r.detail.empty()) std::printf("  detail: %s\n", r.detail.c_str());
        if (r.pass && !ok) std::printf("  detail: over time budget\n");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = run_verify_suite("typetwo", opt);
        all_pass = all_pass && r.pass;
        std::printf("AUXILIARY typetwo: %s (%ld checks, %.2fs)\n", r.pass ? "PASS" : "FAIL", r.checks,
                    seconds_since(t0));
        if (!r.detail.empty()) std::printf("  detail: %s\n", r.detail.c_str());
    }
    std::printf("ACCEPTANCE OVERALL: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
