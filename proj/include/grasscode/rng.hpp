#pragma once

#include <cstdint>
#include <random>

namespace grasscode {

/// The one PRNG used anywhere in the project: std::mt19937_64, whose output
/// sequence is fixed by the C++ standard, wrapped so emitted artifacts can
/// name it. The name is recorded in the header of every randomized output
/// and must never change meaning.
struct Rng {
    static constexpr const char* kAlgorithm = "mt19937_64-v1";

    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t next() { return engine(); }

    std::mt19937_64 engine;
};

}  // namespace grasscode
