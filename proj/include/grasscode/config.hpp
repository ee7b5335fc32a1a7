#pragma once

#include <cstdint>
#include <stdexcept>

namespace grasscode {

// Runtime-adjustable limits. Defaults are desk-scale; the CLI applies the
// GRASSCODE_CAP environment variable / --cap flag to `enumeration`, and
// tests raise or lower the others to exercise both code paths.
struct Caps {
    std::uint64_t enumeration = 10'000'000;  // max |G_q(n,k)| a stream will produce
    std::uint64_t field_size = 1u << 16;     // max q = p^e for a base field
    std::uint64_t ext_size = 1ull << 32;     // max q^n for an extension field
    std::uint64_t log_table = 1u << 20;      // max q^n backed by log/antilog tables
};

Caps& caps();

// A request would exceed a configured cap. CLI exit code 3.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mandatory verification (code distance, covering, Turan) failed.
// CLI exit code 4.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace grasscode
