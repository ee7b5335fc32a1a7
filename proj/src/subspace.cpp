#include "grasscode/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "grasscode/bounds.hpp"
#include "grasscode/config.hpp"

namespace grasscode {

char digit_char(unsigned v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('a' + v - 10);
    throw std::invalid_argument("digit value too large for base-36 rendering");
}

unsigned digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw std::invalid_argument(std::string("bad digit character '") + c + "'");
}

Subspace Subspace::zero(std::uint32_t q, unsigned n) {
    Subspace s;
    s.q = q;
    s.n = n;
    s.k = 0;
    return s;
}

Subspace Subspace::identity(std::uint32_t q, unsigned n) {
    Subspace s;
    s.q = q;
    s.n = n;
    s.k = n;
    s.m.assign(static_cast<std::size_t>(n) * n, 0);
    s.pivots.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        s.m[i * n + i] = 1;
        s.pivots[i] = static_cast<std::uint16_t>(i);
    }
    return s;
}

std::string Subspace::row_string(unsigned r) const {
    std::string s;
    s.reserve(n);
    for (unsigned c = 0; c < n; ++c) s += digit_char(at(r, c));
    return s;
}

std::string Subspace::line_string() const {
    std::string s;
    for (unsigned r = 0; r < k; ++r) {
        if (r) s += '|';
        s += row_string(r);
    }
    return s;
}

namespace {

// GF(2) fast path: rows as machine words, bit j = column j.
std::vector<std::uint64_t> rref_bits(std::vector<std::uint64_t> rows, unsigned n,
                                     std::vector<std::uint16_t>* pivots) {
    unsigned rr = 0;
    for (unsigned col = 0; col < n && rr < rows.size(); ++col) {
        std::uint64_t bit = 1ull << col;
        unsigned pr = rr;
        while (pr < rows.size() && !(rows[pr] & bit)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rr], rows[pr]);
        for (unsigned i = 0; i < rows.size(); ++i)
            if (i != rr && (rows[i] & bit)) rows[i] ^= rows[rr];
        if (pivots) pivots->push_back(static_cast<std::uint16_t>(col));
        ++rr;
    }
    rows.resize(rr);
    return rows;
}

bool gf2_fast_ok(const Field& F, unsigned n) { return F.q() == 2 && n <= 64; }

std::uint64_t row_to_bits(const std::vector<std::uint16_t>& row) {
    std::uint64_t b = 0;
    for (unsigned j = 0; j < row.size(); ++j)
        if (row[j]) b |= 1ull << j;
    return b;
}

Subspace from_bit_rows(const std::vector<std::uint64_t>& rows, unsigned n, std::uint32_t q,
                       std::vector<std::uint16_t> pivots) {
    Subspace s;
    s.q = q;
    s.n = n;
    s.k = static_cast<unsigned>(rows.size());
    s.pivots = std::move(pivots);
    s.m.assign(static_cast<std::size_t>(s.k) * n, 0);
    for (unsigned i = 0; i < s.k; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (rows[i] >> j & 1) s.m[i * n + j] = 1;
    return s;
}

unsigned rank_bits(std::vector<std::uint64_t> rows) {
    unsigned r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) continue;
        std::uint64_t low = rows[i] & -rows[i];
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= rows[i];
        ++r;
    }
    return r;
}

std::vector<std::uint64_t> subspace_bits(const Subspace& s) {
    std::vector<std::uint64_t> rows(s.k, 0);
    for (unsigned i = 0; i < s.k; ++i)
        for (unsigned j = 0; j < s.n; ++j)
            if (s.at(i, j)) rows[i] |= 1ull << j;
    return rows;
}

void validate_rows(const std::vector<std::vector<std::uint16_t>>& rows, unsigned n,
                   std::uint32_t q) {
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("inconsistent row lengths");
        for (auto v : r)
            if (v >= q) throw std::invalid_argument("row entry out of field range");
    }
}

}  // namespace

namespace detail {

Subspace canonicalize_generic(const Field& F,
                              const std::vector<std::vector<std::uint16_t>>& rows_in,
                              unsigned n) {
    validate_rows(rows_in, n, F.q());
    std::vector<std::vector<std::uint16_t>> rows = rows_in;
    std::vector<std::uint16_t> pivots;
    unsigned rr = 0;
    for (unsigned col = 0; col < n && rr < rows.size(); ++col) {
        unsigned pr = rr;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rr], rows[pr]);
        if (unsigned lead = rows[rr][col]; lead != 1) {
            unsigned li = F.inv(lead);
            for (unsigned j = col; j < n; ++j)
                rows[rr][j] = static_cast<std::uint16_t>(F.mul(rows[rr][j], li));
        }
        for (unsigned i = 0; i < rows.size(); ++i) {
            if (i == rr || rows[i][col] == 0) continue;
            unsigned f = rows[i][col];
            for (unsigned j = col; j < n; ++j)
                rows[i][j] =
                    static_cast<std::uint16_t>(F.sub(rows[i][j], F.mul(f, rows[rr][j])));
        }
        pivots.push_back(static_cast<std::uint16_t>(col));
        ++rr;
    }
    Subspace s;
    s.q = F.q();
    s.n = n;
    s.k = rr;
    s.pivots = std::move(pivots);
    s.m.reserve(static_cast<std::size_t>(rr) * n);
    for (unsigned i = 0; i < rr; ++i) s.m.insert(s.m.end(), rows[i].begin(), rows[i].end());
    return s;
}

}  // namespace detail

Subspace canonicalize(const Field& F, const std::vector<std::vector<std::uint16_t>>& rows,
                      unsigned n) {
    if (gf2_fast_ok(F, n)) {
        validate_rows(rows, n, 2);
        std::vector<std::uint64_t> bits(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) bits[i] = row_to_bits(rows[i]);
        std::vector<std::uint16_t> pivots;
        auto rref = rref_bits(std::move(bits), n, &pivots);
        return from_bit_rows(rref, n, 2, std::move(pivots));
    }
    return detail::canonicalize_generic(F, rows, n);
}

namespace {

unsigned stack_rank_generic(const Field& F, const Subspace& U, const Subspace& V) {
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(U.k + V.k);
    for (unsigned i = 0; i < U.k; ++i)
        rows.emplace_back(U.m.begin() + i * U.n, U.m.begin() + (i + 1) * U.n);
    for (unsigned i = 0; i < V.k; ++i)
        rows.emplace_back(V.m.begin() + i * V.n, V.m.begin() + (i + 1) * V.n);
    return detail::canonicalize_generic(F, rows, U.n).k;
}

void require_same_space(const Field& F, const Subspace& U, const Subspace& V) {
    if (U.n != V.n || U.q != V.q || U.q != F.q())
        throw std::invalid_argument("subspaces from different ambient spaces");
}

}  // namespace

unsigned sum_dim(const Field& F, const Subspace& U, const Subspace& V) {
    require_same_space(F, U, V);
    if (gf2_fast_ok(F, U.n)) {
        auto rows = subspace_bits(U);
        auto vb = subspace_bits(V);
        rows.insert(rows.end(), vb.begin(), vb.end());
        return rank_bits(std::move(rows));
    }
    return stack_rank_generic(F, U, V);
}

unsigned intersection_dim(const Field& F, const Subspace& U, const Subspace& V) {
    return U.k + V.k - sum_dim(F, U, V);
}

unsigned subspace_distance(const Field& F, const Subspace& U, const Subspace& V) {
    return U.k + V.k - 2 * intersection_dim(F, U, V);
}

Subspace orthogonal_complement(const Field& F, const Subspace& U) {
    if (U.q != F.q()) throw std::invalid_argument("field mismatch");
    // null-space basis: one vector per free column j, with 1 at j and
    // -U[i][j] at pivot column p_i
    std::vector<bool> is_pivot(U.n, false);
    for (auto p : U.pivots) is_pivot[p] = true;
    std::vector<std::vector<std::uint16_t>> rows;
    for (unsigned j = 0; j < U.n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<std::uint16_t> v(U.n, 0);
        v[j] = 1;
        for (unsigned i = 0; i < U.k; ++i)
            v[U.pivots[i]] = static_cast<std::uint16_t>(F.neg(U.at(i, j)));
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Subspace::zero(U.q, U.n);
    return canonicalize(F, rows, U.n);
}

bool contains(const Field& F, const Subspace& outer, const Subspace& inner) {
    require_same_space(F, outer, inner);
    if (inner.k > outer.k) return false;
    if (gf2_fast_ok(F, outer.n)) {
        auto orows = subspace_bits(outer);
        for (unsigned r = 0; r < inner.k; ++r) {
            std::uint64_t v = 0;
            for (unsigned j = 0; j < inner.n; ++j)
                if (inner.at(r, j)) v |= 1ull << j;
            for (unsigned i = 0; i < outer.k; ++i)
                if (v >> outer.pivots[i] & 1) v ^= orows[i];
            if (v) return false;
        }
        return true;
    }
    for (unsigned r = 0; r < inner.k; ++r) {
        std::vector<std::uint16_t> v(inner.m.begin() + r * inner.n,
                                     inner.m.begin() + (r + 1) * inner.n);
        for (unsigned i = 0; i < outer.k; ++i) {
            unsigned c = v[outer.pivots[i]];
            if (!c) continue;
            for (unsigned j = 0; j < outer.n; ++j)
                v[j] = static_cast<std::uint16_t>(F.sub(v[j], F.mul(c, outer.at(i, j))));
        }
        for (auto x : v)
            if (x) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// GrassmannStream

bool GrassmannStream::Block::advance(std::uint32_t q) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (++digits[t] < q) {
            cur.m[free_pos[t]] = digits[t];
            return true;
        }
        digits[t] = 0;
        cur.m[free_pos[t]] = 0;
    }
    return false;
}

GrassmannStream::GrassmannStream(FieldPtr field, unsigned n, unsigned k)
    : field_(std::move(field)), n_(n), k_(k) {
    if (!field_) throw std::invalid_argument("null field");
    if (k > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    total_ = gaussian_binomial(field_->q(), n, k);
    if (total_ > BigInt(std::to_string(caps().enumeration)))
        throw CapExceeded("refusing to enumerate " + total_.get_str() +
                          " subspaces (cap " + std::to_string(caps().enumeration) + ")");

    // one block per pivot-column set
    std::vector<std::uint16_t> comb(k);
    for (unsigned i = 0; i < k; ++i) comb[i] = static_cast<std::uint16_t>(i);
    bool more = true;
    while (more) {
        Block b;
        b.pivots = comb;
        b.cur.q = field_->q();
        b.cur.n = n;
        b.cur.k = k;
        b.cur.pivots = comb;
        b.cur.m.assign(static_cast<std::size_t>(k) * n, 0);
        std::vector<bool> is_pivot(n, false);
        for (auto p : comb) is_pivot[p] = true;
        for (unsigned i = 0; i < k; ++i) {
            b.cur.m[i * n + comb[i]] = 1;
            for (unsigned j = comb[i] + 1; j < n; ++j)
                if (!is_pivot[j]) b.free_pos.push_back(i * n + j);
        }
        std::sort(b.free_pos.begin(), b.free_pos.end());
        b.digits.assign(b.free_pos.size(), 0);
        blocks_.push_back(std::move(b));

        // next k-combination of {0..n-1}
        if (k == 0) break;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++comb[i];
            for (unsigned j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    heap_.reserve(blocks_.size());
    for (std::uint32_t i = 0; i < blocks_.size(); ++i) heap_push(i);
}

void GrassmannStream::heap_push(std::uint32_t b) {
    heap_.push_back(b);
    std::size_t i = heap_.size() - 1;
    while (i > 0) {
        std::size_t par = (i - 1) / 2;
        if (!head_less(heap_[i], heap_[par])) break;
        std::swap(heap_[i], heap_[par]);
        i = par;
    }
}

std::uint32_t GrassmannStream::heap_pop() {
    std::uint32_t top = heap_[0];
    heap_[0] = heap_.back();
    heap_.pop_back();
    std::size_t i = 0;
    while (true) {
        std::size_t l = 2 * i + 1, r = l + 1, best = i;
        if (l < heap_.size() && head_less(heap_[l], heap_[best])) best = l;
        if (r < heap_.size() && head_less(heap_[r], heap_[best])) best = r;
        if (best == i) break;
        std::swap(heap_[i], heap_[best]);
        i = best;
    }
    return top;
}

std::optional<Subspace> GrassmannStream::next() {
    if (heap_.empty()) return std::nullopt;
    std::uint32_t b = heap_pop();
    Subspace out = blocks_[b].cur;
    if (blocks_[b].advance(field_->q())) heap_push(b);
    return out;
}

// ---------------------------------------------------------------------------
// SubspacesWithinStream

SubspacesWithinStream::SubspacesWithinStream(FieldPtr field, Subspace V, unsigned r)
    : field_(field), V_(std::move(V)), inner_(field, V_.k, r) {
    if (r > V_.k) throw std::invalid_argument("target dimension exceeds dim V");
}

std::optional<Subspace> SubspacesWithinStream::next() {
    auto w = inner_.next();
    if (!w) return std::nullopt;
    // Coefficient-space RREF times V's RREF basis is already an ambient
    // RREF: pivots land at V.pivots[i] for W's pivot coordinates i.
    const Field& F = *field_;
    Subspace s;
    s.q = V_.q;
    s.n = V_.n;
    s.k = w->k;
    s.m.assign(static_cast<std::size_t>(s.k) * s.n, 0);
    for (unsigned r = 0; r < w->k; ++r) {
        for (unsigned i = 0; i < V_.k; ++i) {
            unsigned c = w->at(r, i);
            if (!c) continue;
            for (unsigned j = 0; j < V_.n; ++j) {
                if (!V_.at(i, j)) continue;
                auto& cell = s.m[r * s.n + j];
                cell = static_cast<std::uint16_t>(F.add(cell, F.mul(c, V_.at(i, j))));
            }
        }
    }
    s.pivots.resize(w->k);
    for (unsigned r = 0; r < w->k; ++r) s.pivots[r] = V_.pivots[w->pivots[r]];
    return s;
}

// ---------------------------------------------------------------------------
// SuperspaceStream

namespace {
unsigned quotient_target_dim(const Subspace& U, unsigned k) {
    if (k < U.k || k > U.n)
        throw std::invalid_argument("superspace dimension out of range");
    return k - U.k;
}
}  // namespace

SuperspaceStream::SuperspaceStream(FieldPtr field, Subspace U, unsigned k)
    : field_(field), U_(std::move(U)), k_(k),
      inner_(field, U_.n - U_.k, quotient_target_dim(U_, k)) {
    std::vector<bool> is_pivot(U_.n, false);
    for (auto p : U_.pivots) is_pivot[p] = true;
    for (unsigned j = 0; j < U_.n; ++j)
        if (!is_pivot[j]) free_cols_.push_back(j);
}

std::optional<Subspace> SuperspaceStream::next() {
    auto w = inner_.next();
    if (!w) return std::nullopt;
    // lift each quotient row back along the non-pivot columns of U, then
    // reduce the stack to canonical form
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(U_.k + w->k);
    for (unsigned i = 0; i < U_.k; ++i)
        rows.emplace_back(U_.m.begin() + i * U_.n, U_.m.begin() + (i + 1) * U_.n);
    for (unsigned r = 0; r < w->k; ++r) {
        std::vector<std::uint16_t> v(U_.n, 0);
        for (unsigned t = 0; t < free_cols_.size(); ++t) v[free_cols_[t]] = w->at(r, t);
        rows.push_back(std::move(v));
    }
    return canonicalize(*field_, rows, U_.n);
}

}  // namespace grasscode
