#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dnq/quiver.hpp"

namespace dnq {

struct VerifyResult {
    std::string suite;
    bool pass = false;
    long checks = 0;
    std::string detail;  // counterexample dump or summary
};

struct VerifyOptions {
    int rmax = 4;       // homogeneous-tube depth
    int height = 12;    // root height bound for the cross-pipeline sweep
    int primes = 2;     // extra held-out primes for the point-count property
    int oracle_total_dim = 10;
};

// Individual suites.  Every suite runs every one of its checks and reports
// the first few failures in `detail`.
VerifyResult verify_snake(const VerifyOptions& opt);      // recursion vs enumeration vs closed form
VerifyResult verify_cross(const VerifyOptions& opt);      // f_root vs reflection_chain, all D~4 orientations
VerifyResult verify_oracle(const VerifyOptions& opt);     // f_root vs point counting
VerifyResult verify_homog(const VerifyOptions& opt);      // homogeneous-tube identities
VerifyResult verify_defect2(const VerifyOptions& opt);    // middle-term formula vs oracle
VerifyResult verify_binomial(const VerifyOptions& opt);   // binomial identities
VerifyResult verify_euler(const VerifyOptions& opt);      // Euler propagation under reflections
VerifyResult verify_structural(const VerifyOptions& opt); // sanity, duality, direct sums
VerifyResult verify_cc(const VerifyOptions& opt);         // Caldero-Chapoton map
VerifyResult verify_typetwo(const VerifyOptions& opt);    // simple-socle reduction identity

std::vector<std::string> verify_suite_names();
// Accepts the canonical names plus short aliases (formhom, duality, type-two, binolem, bgpeuler).
VerifyResult run_verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace dnq
