#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/bigint.hpp"
#include "grasscode/field.hpp"

namespace grasscode {

/// A k-dimensional subspace of F_q^n held as its reduced row echelon
/// basis, the unique canonical representative. Two Subspace values are
/// equal iff their matrices are entry-identical, and the global order on
/// a Grassmannian is lexicographic on the flattened digit string.
struct Subspace {
    std::uint32_t q = 0;
    unsigned n = 0;
    unsigned k = 0;
    std::vector<std::uint16_t> m;       // row-major k x n entries
    std::vector<std::uint16_t> pivots;  // strictly increasing pivot columns

    std::uint16_t at(unsigned r, unsigned c) const { return m[r * n + c]; }

    static Subspace zero(std::uint32_t q, unsigned n);
    static Subspace identity(std::uint32_t q, unsigned n);

    std::string row_string(unsigned r) const;
    std::string line_string() const;  // rows joined by '|'

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const {
        if (n != o.n) return n < o.n;
        if (k != o.k) return k < o.k;
        return m < o.m;
    }
};

char digit_char(unsigned v);
unsigned digit_value(char c);

/// RREF of the row span; independent of input row order and scaling.
/// An all-zero span yields the 0-dimensional subspace.
Subspace canonicalize(const Field& F, const std::vector<std::vector<std::uint16_t>>& rows,
                      unsigned n);

namespace detail {
// Generic-field elimination, bypassing the GF(2) bitset fast path.
// Exposed so tests can assert both paths produce identical canonical forms.
Subspace canonicalize_generic(const Field& F,
                              const std::vector<std::vector<std::uint16_t>>& rows, unsigned n);
}  // namespace detail

/// dim(U + V): rank of the stacked basis matrices.
unsigned sum_dim(const Field& F, const Subspace& U, const Subspace& V);
/// dim(U ∩ V) = dim U + dim V - dim(U + V).
unsigned intersection_dim(const Field& F, const Subspace& U, const Subspace& V);
/// Subspace distance dim U + dim V - 2 dim(U ∩ V); even for equal dims.
unsigned subspace_distance(const Field& F, const Subspace& U, const Subspace& V);
/// Null space of U's matrix under the standard bilinear form; involutive.
Subspace orthogonal_complement(const Field& F, const Subspace& U);
/// inner ⊆ outer
bool contains(const Field& F, const Subspace& outer, const Subspace& inner);

/// Lazy enumeration of G_q(n,k), every k-subspace exactly once in
/// lexicographic order of the flattened digit string.
///
/// RREF matrices with a fixed pivot-column set form a contiguous odometer
/// over their free entries, but blocks of distinct pivot sets interleave
/// in the global lex order, so the stream is a k-way merge: one odometer
/// per pivot set, a min-heap on the current head matrices.
class GrassmannStream {
public:
    // Throws CapExceeded when |G_q(n,k)| exceeds caps().enumeration; the
    // message carries the exact refused count.
    GrassmannStream(FieldPtr field, unsigned n, unsigned k);

    std::optional<Subspace> next();
    const BigInt& total() const { return total_; }

private:
    struct Block {
        std::vector<std::uint16_t> pivots;
        std::vector<std::uint32_t> free_pos;  // flattened positions, ascending
        std::vector<std::uint16_t> digits;    // current free-entry values
        Subspace cur;
        bool advance(std::uint32_t q);  // odometer step; false once wrapped
    };

    bool head_less(std::uint32_t a, std::uint32_t b) const {
        return blocks_[a].cur.m < blocks_[b].cur.m;
    }
    void heap_push(std::uint32_t b);
    std::uint32_t heap_pop();

    FieldPtr field_;
    unsigned n_, k_;
    BigInt total_;
    std::vector<Block> blocks_;
    std::vector<std::uint32_t> heap_;
};

/// All r-dimensional subspaces of V, each exactly once, in ambient
/// coordinates. Count = [dim V choose r]_q.
class SubspacesWithinStream {
public:
    SubspacesWithinStream(FieldPtr field, Subspace V, unsigned r);
    std::optional<Subspace> next();

private:
    FieldPtr field_;
    Subspace V_;
    GrassmannStream inner_;
};

/// All k-dimensional superspaces of U, each exactly once.
/// Count = [n - dim U choose k - dim U]_q.
class SuperspaceStream {
public:
    SuperspaceStream(FieldPtr field, Subspace U, unsigned k);
    std::optional<Subspace> next();

private:
    FieldPtr field_;
    Subspace U_;
    unsigned k_;
    std::vector<unsigned> free_cols_;  // non-pivot columns of U
    GrassmannStream inner_;            // over the quotient F_q^(n-d)
};

}  // namespace grasscode
