#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "grasscode/code.hpp"
#include "grasscode/field.hpp"

namespace grasscode {

struct CodeReport {
    bool valid = false;
    unsigned d = 0;                           // distance the check ran at
    std::optional<unsigned> min_distance;     // observed; absent for < 2 members
    std::optional<std::pair<Subspace, Subspace>> violation;
};

/// Exhaustive pairwise check that d_S >= d, via the equivalent criterion
/// dim(U ∩ V) <= k - d/2.
CodeReport verify_code(const SubspaceCode& code, unsigned d);

struct CoveringReport {
    bool valid = false;
    unsigned r = 0;
    std::uint64_t min_cover = 0;  // over all r-subspaces (0 when any uncovered)
    std::uint64_t max_cover = 0;
    std::uint64_t uncovered = 0;
    std::optional<Subspace> witness;  // an uncovered r-subspace
};

/// Streams G_q(n,r), counting covers per r-subspace.
CoveringReport verify_covering(const SubspaceCode& code, unsigned r);

struct TuranReport {
    bool valid = false;
    unsigned k = 0;
    std::uint64_t violations = 0;
    std::optional<Subspace> witness;  // a k-subspace containing no member
};

/// Streams G_q(n,k), checking each k-subspace contains some member.
TuranReport verify_turan(const SubspaceCode& code, unsigned k);

/// Completes a verified (n,M,2delta+2,k)_q code to a covering of the
/// (k-delta)-subspaces: each still-uncovered U, in lexicographic order and
/// re-checking coverage as additions accumulate, gets a k-superspace built
/// by extending U's basis with the least independent vectors. The result
/// never exceeds M + ([n k-d]_q - [k k-d]_q M) members.
SubspaceCode code_to_covering(const SubspaceCode& code, unsigned delta);

/// Thins a verified covering of the (k-delta)-subspaces down to a code of
/// distance >= 2delta+2: incidence pairs (U,V) in lexicographic order, V is
/// dropped whenever one of its pairs has an earlier cover of the same U.
/// Size ends at least |C| + [n k-d]_q - [k k-d]_q |C|.
SubspaceCode covering_to_code(const SubspaceCode& covering, unsigned delta);

/// The subfield spread: cosets alpha^i GF(q^k) inside GF(q^n), for k | n.
/// The (q^n-1)/(q^k-1) members partition the nonzero vectors (verified)
/// and form an optimal distance-2k code.
SubspaceCode spread_construct(FieldPtr field, unsigned n, unsigned k);

/// Memberwise orthogonal complement of a verified code; distance profile
/// is preserved, so the result is an (n,M,d,n-k)_q code.
SubspaceCode dual_code(const SubspaceCode& code, unsigned d);

/// Embeds a verified covering of F_q^n into F_q^(n+1): new coordinate
/// appended last, each member extended by the span of the last standard
/// vector. Size is unchanged and the result covers all r-subspaces.
SubspaceCode lift_covering(const SubspaceCode& covering, unsigned r);

enum class DesignKind { Covering, Turan };

/// Memberwise orthogonal complement mapping a covering C_q(n,k,r) to a
/// Turan design T_q(n,n-r,n-k) and back; an involution on members.
/// param is r for coverings, k for Turan designs. Input and output are
/// both verified.
SubspaceCode turan_dual(const SubspaceCode& design, DesignKind kind, unsigned param);

}  // namespace grasscode
