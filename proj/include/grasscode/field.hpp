#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grasscode/config.hpp"

namespace grasscode {

bool is_prime(std::uint64_t m);

// Prime factors of m (each once), by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// GF(p^e), exact arithmetic on integer element indices.
///
/// An index in [0, q) encodes the coefficient vector of the polynomial
/// representative in base p, constant term first: index = sum c_i p^i.
/// The modulus is a monic irreducible of degree e over GF(p), verified at
/// construction by trial division. Immutable after construction and safe
/// to share across threads; all operations are pure.
class Field {
public:
    // modulus: e+1 coefficients, constant term first, monic. Empty selects
    // the least irreducible in digit-string order (deterministic).
    explicit Field(unsigned p, unsigned e = 1, std::vector<unsigned> modulus = {});

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return mod_; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;  // throws std::domain_error on 0
    unsigned pow(unsigned a, std::uint64_t exp) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t element_order(unsigned a) const;

    // "2", or "2^2;modulus=111" for extensions (file/CLI syntax).
    std::string spec_string() const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }

private:
    void check(unsigned a) const;
    unsigned mul_poly(unsigned a, unsigned b) const;

    unsigned p_ = 0, e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> mod_;
    // log/antilog tables for e > 1 (q is capped, so always affordable)
    std::vector<std::uint32_t> exp_, log_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned e = 1, std::vector<unsigned> modulus = {});

// Accepts "q", "p^e" or "p^e;modulus=<digits>" (digits base p, constant
// term first, exactly e+1 of them).
FieldPtr parse_field(const std::string& s);

/// GF(q^n) built over a base GF(q), with a designated primitive element.
///
/// Element indices are base-q digit vectors: index sum c_i q^i represents
/// sum c_i x^i, so the coordinate vector of an element over GF(q) is its
/// digit vector: the map element <-> F_q^n is a bijection and F_q-linear
/// by construction. When q^n fits under the log-table cap, discrete-log
/// tables back multiplication and dlog; beyond it, arithmetic falls back
/// to polynomial vectors.
class ExtField {
public:
    // modulus: n+1 base-field element indices, constant term first, monic.
    // Empty selects the least irreducible in digit-string order.
    ExtField(FieldPtr base, unsigned degree, std::vector<unsigned> modulus = {});

    const Field& base() const { return *base_; }
    const FieldPtr& base_ptr() const { return base_; }
    unsigned degree() const { return n_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t period() const { return size_ - 1; }
    const std::vector<unsigned>& modulus() const { return mod_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t exp) const;
    std::uint64_t element_order(std::uint64_t a) const;

    /// The designated primitive element: least index of multiplicative
    /// order exactly q^n - 1 (verified against every prime factor).
    std::uint64_t alpha() const { return alpha_; }

    bool has_tables() const { return !exp_.empty(); }
    std::uint64_t dlog(std::uint64_t x) const;       // requires tables, x != 0
    std::uint64_t alpha_pow(std::uint64_t i) const;  // alpha^i, works without tables

    std::vector<unsigned> coords(std::uint64_t x) const;
    std::uint64_t from_coords(const std::vector<unsigned>& c) const;

private:
    std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_poly(std::uint64_t a, std::uint64_t exp) const;

    FieldPtr base_;
    unsigned n_ = 0;
    std::uint64_t size_ = 0;
    std::vector<unsigned> mod_;
    std::uint64_t alpha_ = 0;
    std::vector<std::uint32_t> exp_, log_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

ExtFieldPtr make_ext_field(FieldPtr base, unsigned degree,
                           std::vector<unsigned> modulus = {});

/// An element bound to its field; arithmetic checks both operands come
/// from the same field.
struct FieldElement {
    FieldPtr field;
    unsigned value = 0;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exp) const;
    bool operator==(const FieldElement& o) const;
};

}  // namespace grasscode
