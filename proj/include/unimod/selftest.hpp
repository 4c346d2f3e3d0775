#pragma once

#include "unimod/decide.hpp"

#include <string>
#include <vector>

namespace unimod {

struct SelftestOptions {
    bool corrupt_im = false;  // debug: perturb Im before the Im-dependent checks
    std::uint64_t seed = kDefaultPitSeed;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the structure-map verification suite over the built-in instance
/// matrix (group algebras, Sweedler, taft(3) with their trivial, regular,
/// and A1(2,1,0) comodule algebras).  Deterministic order and output.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace unimod
