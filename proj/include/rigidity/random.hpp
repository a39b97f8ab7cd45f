#pragma once

#include <cstdint>
#include <random>

#include "rigidity/sym_matrix.hpp"

namespace rigidity {

/// Seeded generator with a platform-independent mapping to doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Per-item stream seed: the campaign seed xor the item index, passed
/// through splitmix64 so neighbouring indices give unrelated streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Entries uniform in [−1, 1].
SymMatrix random_symmetric(int n, Rng& rng);
SymMatrix random_trace_free(int n, Rng& rng);

/// Product of random plane rotations (3n² of them), orthogonal to rounding.
DenseMatrix random_orthogonal(int n, Rng& rng);

/// Q·diag(μ, …, μ, −(n − 1)μ)·Qᵀ for a random orthogonal Q.
SymMatrix equality_family_member(int n, double mu, Rng& rng);

}  // namespace rigidity
