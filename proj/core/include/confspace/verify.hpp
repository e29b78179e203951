#ifndef CONFSPACE_VERIFY_HPP
#define CONFSPACE_VERIFY_HPP

#include <string>
#include <vector>

#include "confspace/manifold.hpp"

namespace confspace {

struct SuiteReport {
    std::string suite;
    bool pass = false;
    long checks = 0;
    std::string detail;  // first counterexample, or a short summary
};

/// Suites: relations, cofaces, n-membership, dual-basis, equivariance,
/// kernel-diagonal. Failures are report content, not exceptions.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const ManifoldSpec& spec);

} // namespace confspace

#endif
