#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace dsim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Invalid argument values (step sizes, probabilities, counts).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dimension mismatches between coupled quantities.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structural requirements on graphs/matrices (connectivity, stochasticity).
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// API misuse that no input data can make valid (e.g. unsupported combinations).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Iterative procedures failing to converge, singular systems, overflow.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random generation failing under its constraints (e.g. connectivity cap).
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and up to three
/// stream coordinates (run index, agent index, purpose tag).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t s0,
                                 std::uint64_t s1 = 0, std::uint64_t s2 = 0) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ s0);
    h = splitmix64(h ^ s1);
    h = splitmix64(h ^ s2);
    return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace dsim
