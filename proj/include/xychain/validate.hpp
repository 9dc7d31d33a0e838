#pragma once

#include <string>
#include <vector>

namespace xychain {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Effective-theory vs exact-dynamics agreement checks. quick restricts the
/// suite to the two-site Rabi solution and the N = 8 uniform channel.
std::vector<CheckResult> run_validation(bool quick);

}  // namespace xychain
