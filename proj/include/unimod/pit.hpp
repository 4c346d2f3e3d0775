#pragma once

#include "unimod/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace unimod {

/// Default seed for the randomized identity-testing fallback; every sampled
/// verdict is reproducible from this constant (override via --seed).
inline constexpr std::uint64_t kDefaultPitSeed = 0x5EEDC0DE2024ULL;

struct PitOptions {
    std::uint64_t seed = kDefaultPitSeed;
    std::uint64_t grid_budget = 1000000;  // max grid points for the deterministic path
    int trials = 64;
    std::uint32_t sample_bound = 1u << 20;  // coordinates drawn from [0, sample_bound)
};

struct PitCertificate {
    enum class Kind { witness, certified_zero, probable_zero };
    Kind kind = Kind::certified_zero;
    std::optional<Vector> witness;  // coordinate vector t* with det L(t*) != 0
    bool deterministic = true;
    std::uint64_t points_evaluated = 0;
    unsigned degree_bound = 0;
    std::uint64_t seed = 0;   // meaningful when !deterministic
    int trials = 0;           // meaningful when !deterministic
    std::uint32_t sample_bound = 0;
};

/// Decides whether det(sum_k t_k * gens[k]) is the zero polynomial.  The
/// determinant has total degree <= n, so the grid {0..n}^d is exhaustive
/// for the deterministic verdict; otherwise falls back to seeded sampling.
PitCertificate invertible_in_subspace(const std::vector<Matrix>& gens,
                                      const PitOptions& opts = {});

}  // namespace unimod
