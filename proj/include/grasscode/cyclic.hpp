#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grasscode/bigint.hpp"
#include "grasscode/code.hpp"
#include "grasscode/field.hpp"

namespace grasscode {

/// A subspace of F_q^n seen inside GF(q^n): the sorted discrete logs of
/// its nonzero elements (zero implicit). Multiplying by the primitive
/// element alpha shifts every log by one, which is the cyclic-shift action.
struct FieldSubspace {
    ExtFieldPtr ext;
    std::vector<std::uint64_t> logs;  // sorted, size q^k - 1
    unsigned k = 0;

    bool operator==(const FieldSubspace& o) const { return logs == o.logs; }
};

/// Conversion along the coordinate isomorphism fixed at ExtField
/// construction (the polynomial basis); inverse of from_field_repr.
FieldSubspace to_field_repr(const Subspace& U, ExtFieldPtr ext);
Subspace from_field_repr(const FieldSubspace& V);

/// Exhaustive additive-closure check of the element set plus zero.
bool additively_closed(const FieldSubspace& V);

FieldSubspace alpha_shift(const FieldSubspace& V, std::uint64_t steps);

/// The distinct shifts of V in order shift 0, 1, ...; the length divides
/// q^n - 1.
std::vector<FieldSubspace> orbit(const FieldSubspace& V);

/// The binary indicator of a subspace over the powers of alpha:
/// bit i set iff alpha^i lies in the subspace. Multiplying the subspace by
/// alpha rotates the vector by one position.
struct CharacteristicVector {
    std::vector<bool> bits;  // length q^n - 1

    static CharacteristicVector of(const FieldSubspace& V);
    CharacteristicVector rotated(std::uint64_t steps) const;
    std::uint64_t popcount() const;
    bool operator==(const CharacteristicVector&) const = default;
    bool operator<(const CharacteristicVector& o) const { return bits < o.bits; }
};

struct CyclicReport {
    bool cyclic = false;
    std::optional<Subspace> witness;  // a member whose shift is absent
};

/// True iff the member set is a union of complete alpha-orbits.
CyclicReport is_cyclic(const SubspaceCode& code, ExtFieldPtr ext);

struct OrbitInfo {
    Subspace representative;  // member with the least characteristic vector
    std::uint64_t length = 0;
};

struct CyclicSearchResult {
    SubspaceCode code;
    std::vector<OrbitInfo> accepted;
    BigRat ratio_to_packing;      // exact
    std::string ratio_decimal;    // 4 places
    std::uint64_t seed = 0;
};

/// Greedy cyclic-code search: orbit representatives visited in seeded
/// random order, an orbit accepted only when the union keeps minimum
/// distance >= d (orbit against itself and against the code), so the
/// output is cyclic by construction. Best-effort; no optimality claim.
CyclicSearchResult cyclic_greedy_search(ExtFieldPtr ext, unsigned k, unsigned d,
                                        std::uint64_t seed);

}  // namespace grasscode
