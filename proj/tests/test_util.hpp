#pragma once

#include <cstdint>
#include <vector>

#include "grasscode/config.hpp"
#include "grasscode/subspace.hpp"

namespace grasscode::test {

// restores every cap on scope exit
struct CapGuard {
    Caps saved = caps();
    ~CapGuard() { caps() = saved; }
};

using Rows = std::vector<std::vector<std::uint16_t>>;

inline Subspace span_of(const Field& F, const Rows& rows, unsigned n) {
    return canonicalize(F, rows, n);
}

template <typename Stream>
std::vector<Subspace> collect(Stream&& st) {
    std::vector<Subspace> out;
    while (auto s = st.next()) out.push_back(std::move(*s));
    return out;
}

}  // namespace grasscode::test
