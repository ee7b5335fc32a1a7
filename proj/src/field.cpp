#include "grasscode/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasscode {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

// Dense polynomials over GF(p), constant term first, exact length kept by
// the caller. Used only while constructing a Field (tables take over after).
using Poly = std::vector<unsigned>;

unsigned pdeg(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<unsigned>(i);
    return 0;
}

bool pzero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

// remainder of a mod b (b monic-led after normalization), coefficients mod p
Poly prem(Poly a, const Poly& b, unsigned p) {
    unsigned db = pdeg(b);
    unsigned lead = b[db];
    // lead inverse mod p
    unsigned li = 1;
    for (unsigned x = 1; x < p; ++x)
        if (x * lead % p == 1) { li = x; break; }
    while (!pzero(a) && pdeg(a) >= db) {
        unsigned da = pdeg(a);
        unsigned f = a[da] * li % p;
        for (unsigned i = 0; i <= db; ++i) {
            unsigned j = da - db + i;
            a[j] = (a[j] + p - f * b[i] % p) % p;
        }
    }
    return a;
}

bool poly_divides(const Poly& g, const Poly& f, unsigned p) {
    return pzero(prem(f, g, p));
}

// Irreducible over GF(p) iff no monic divisor of degree 1..deg/2.
// Trial division is quadratic in the candidate count but q is capped.
bool poly_irreducible(const Poly& f, unsigned p) {
    unsigned e = pdeg(f);
    if (e == 0) return false;
    if (e == 1) return true;
    for (unsigned d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            Poly g(d + 1, 0);
            std::uint64_t t = m;
            for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(t % p); t /= p; }
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

// Least monic irreducible of degree e in digit-string order: candidates
// compared on (c_0, c_1, ..., c_{e-1}), constant term most significant.
Poly least_irreducible(unsigned p, unsigned e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        Poly f(e + 1, 0);
        std::uint64_t t = m;
        for (unsigned i = e; i-- > 0;) { f[i] = static_cast<unsigned>(t % p); t /= p; }
        f[e] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > caps().field_size)
            throw CapExceeded("field size " + std::to_string(p) + "^" + std::to_string(e) +
                              " exceeds cap " + std::to_string(caps().field_size));
    }
    q_ = static_cast<std::uint32_t>(q);

    if (modulus.empty()) {
        mod_ = e == 1 ? std::vector<unsigned>{0, 1} : least_irreducible(p, e);
    } else {
        if (modulus.size() != e + 1)
            throw std::invalid_argument("modulus must have exactly e+1 coefficients");
        for (unsigned c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!poly_irreducible(modulus, p))
            throw std::invalid_argument("modulus is reducible over GF(p)");
        mod_ = std::move(modulus);
    }

    if (e_ > 1) {
        // find the least-index generator of GF(q)*, then tabulate its powers
        auto factors = prime_factors(q_ - 1);
        unsigned g = 0;
        for (unsigned cand = 1; cand < q_; ++cand) {
            bool ok = true;
            for (auto f : factors)
                if (pow(cand, (q_ - 1) / f) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = static_cast<std::uint32_t>(mul_poly(x, g));
        }
        if (x != 1) throw std::logic_error("generator order mismatch");
    }
}

void Field::check(unsigned a) const {
    if (a >= q_) throw std::invalid_argument("element index out of range");
}

unsigned Field::add(unsigned a, unsigned b) const {
    check(a); check(b);
    if (e_ == 1) return (a + b) % p_;
    unsigned r = 0, place = 1;
    while (a || b) {
        r += (a % p_ + b % p_) % p_ * place;
        a /= p_; b /= p_; place *= p_;
    }
    return r;
}

unsigned Field::neg(unsigned a) const {
    check(a);
    if (e_ == 1) return (p_ - a) % p_;
    unsigned r = 0, place = 1;
    while (a) {
        r += (p_ - a % p_) % p_ * place;
        a /= p_; place *= p_;
    }
    return r;
}

unsigned Field::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned Field::mul_poly(unsigned a, unsigned b) const {
    // schoolbook product of the digit vectors, reduced mod mod_
    std::vector<unsigned> da(e_, 0), db(e_, 0);
    for (unsigned i = 0; i < e_; ++i) { da[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < e_; ++i) { db[i] = b % p_; b /= p_; }
    std::vector<unsigned> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned d = 2 * e_ - 2; d >= e_; --d) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < e_; ++i)
            prod[d - e_ + i] = (prod[d - e_ + i] + p_ - c * mod_[i] % p_) % p_;
    }
    unsigned r = 0;
    for (unsigned i = e_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

unsigned Field::mul(unsigned a, unsigned b) const {
    check(a); check(b);
    if (e_ == 1) return a * b % p_;
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_poly(a, b);
}

unsigned Field::inv(unsigned a) const {
    check(a);
    if (a == 0) throw std::domain_error("inversion of zero");
    if (e_ == 1) {
        // extended Euclid in Z_p
        long long t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            long long qq = r / nr;
            std::swap(t -= qq * nt, nt);
            std::swap(r -= qq * nr, nr);
        }
        return static_cast<unsigned>((t % p_ + p_) % p_);
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned Field::pow(unsigned a, std::uint64_t exp) const {
    check(a);
    if (a == 0) return exp == 0 ? 1 : 0;
    if (e_ > 1 && !exp_.empty())
        return exp_[static_cast<std::uint64_t>(log_[a]) * (exp % (q_ - 1)) % (q_ - 1)];
    unsigned r = 1, base = a;
    while (exp) {
        if (exp & 1) r = e_ == 1 ? r * base % p_ : mul_poly(r, base);
        base = e_ == 1 ? base * base % p_ : mul_poly(base, base);
        exp >>= 1;
    }
    return r;
}

std::uint64_t Field::element_order(unsigned a) const {
    check(a);
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto f : prime_factors(q_ - 1))
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    return ord;
}

std::string Field::spec_string() const {
    if (e_ == 1) return std::to_string(p_);
    std::string s = std::to_string(p_) + "^" + std::to_string(e_) + ";modulus=";
    for (unsigned c : mod_) s += static_cast<char>(c < 10 ? '0' + c : 'a' + c - 10);
    return s;
}

FieldPtr make_field(unsigned p, unsigned e, std::vector<unsigned> modulus) {
    return std::make_shared<Field>(p, e, std::move(modulus));
}

FieldPtr parse_field(const std::string& s) {
    std::string head = s;
    std::string mod_str;
    if (auto pos = s.find(";modulus="); pos != std::string::npos) {
        head = s.substr(0, pos);
        mod_str = s.substr(pos + 9);
    }
    unsigned p = 0, e = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = static_cast<unsigned>(std::stoul(head.substr(0, caret)));
        e = static_cast<unsigned>(std::stoul(head.substr(caret + 1)));
    } else {
        // plain integer: factor as p^e
        std::uint64_t q = std::stoull(head);
        if (q < 2) throw std::invalid_argument("field order must be >= 2");
        std::uint64_t base = 2;
        while (q % base != 0) ++base;
        std::uint64_t t = q;
        e = 0;
        while (t % base == 0) { t /= base; ++e; }
        if (t != 1) throw std::invalid_argument(head + " is not a prime power");
        p = static_cast<unsigned>(base);
    }
    std::vector<unsigned> modulus;
    for (char c : mod_str) {
        unsigned v = c >= '0' && c <= '9' ? c - '0'
                   : c >= 'a' && c <= 'z' ? c - 'a' + 10
                                          : throw std::invalid_argument("bad modulus digit");
        modulus.push_back(v);
    }
    return make_field(p, e, std::move(modulus));
}

// ---------------------------------------------------------------------------
// ExtField

namespace {

// polynomial helpers over an arbitrary base field, coefficients are element
// indices, constant term first
using FPoly = std::vector<unsigned>;

unsigned fdeg(const FPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<unsigned>(i);
    return 0;
}

bool fzero(const FPoly& f) {
    return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

FPoly frem(FPoly a, const FPoly& b, const Field& F) {
    unsigned db = fdeg(b);
    unsigned li = F.inv(b[db]);
    while (!fzero(a) && fdeg(a) >= db) {
        unsigned da = fdeg(a);
        unsigned f = F.mul(a[da], li);
        for (unsigned i = 0; i <= db; ++i)
            a[da - db + i] = F.sub(a[da - db + i], F.mul(f, b[i]));
    }
    return a;
}

bool fpoly_irreducible(const FPoly& f, const Field& F) {
    unsigned n = fdeg(f);
    if (n == 0) return false;
    if (n == 1) return true;
    for (unsigned d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t m = 0; m < count; ++m) {
            FPoly g(d + 1, 0);
            std::uint64_t t = m;
            for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(t % F.q()); t /= F.q(); }
            g[d] = 1;
            if (fzero(frem(f, g, F))) return false;
        }
    }
    return true;
}

FPoly least_irreducible_over(const Field& F, unsigned n) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= F.q();
    for (std::uint64_t m = 0; m < count; ++m) {
        FPoly f(n + 1, 0);
        std::uint64_t t = m;
        for (unsigned i = n; i-- > 0;) { f[i] = static_cast<unsigned>(t % F.q()); t /= F.q(); }
        f[n] = 1;
        if (fpoly_irreducible(f, F)) return f;
    }
    throw std::logic_error("no irreducible polynomial found over base field");
}

}  // namespace

ExtField::ExtField(FieldPtr base, unsigned degree, std::vector<unsigned> modulus)
    : base_(std::move(base)), n_(degree) {
    if (!base_) throw std::invalid_argument("null base field");
    if (degree < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (size > caps().ext_size / base_->q())
            throw CapExceeded("extension field size exceeds cap " +
                              std::to_string(caps().ext_size));
        size *= base_->q();
    }
    size_ = size;

    if (modulus.empty()) {
        mod_ = degree == 1 ? std::vector<unsigned>{0, 1}
                           : least_irreducible_over(*base_, degree);
    } else {
        if (modulus.size() != degree + 1)
            throw std::invalid_argument("modulus must have exactly degree+1 coefficients");
        for (unsigned c : modulus)
            if (c >= base_->q()) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!fpoly_irreducible(modulus, *base_))
            throw std::invalid_argument("modulus is reducible over the base field");
        mod_ = std::move(modulus);
    }

    // least index of full multiplicative order, verified against every
    // prime factor of q^n - 1
    auto factors = prime_factors(period());
    for (std::uint64_t cand = 1; cand < size_; ++cand) {
        bool ok = true;
        for (auto f : factors)
            if (pow_poly(cand, period() / f) == 1) { ok = false; break; }
        if (ok) { alpha_ = cand; break; }
    }
    if (alpha_ == 0) throw std::logic_error("no primitive element found");

    if (size_ <= caps().log_table) {
        exp_.resize(period());
        log_.assign(size_, 0);
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < period(); ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = mul_poly(x, alpha_);
        }
        if (x != 1) throw std::logic_error("primitive element order mismatch");
    }
}

std::uint64_t ExtField::add(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t q = base_->q();
    std::uint64_t r = 0, place = 1;
    while (a || b) {
        r += static_cast<std::uint64_t>(base_->add(a % q, b % q)) * place;
        a /= q; b /= q; place *= q;
    }
    return r;
}

std::uint64_t ExtField::sub(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t q = base_->q();
    std::uint64_t r = 0, place = 1;
    while (a || b) {
        r += static_cast<std::uint64_t>(base_->sub(a % q, b % q)) * place;
        a /= q; b /= q; place *= q;
    }
    return r;
}

std::uint64_t ExtField::mul_poly(std::uint64_t a, std::uint64_t b) const {
    const std::uint32_t q = base_->q();
    std::vector<unsigned> da(n_, 0), db(n_, 0);
    for (unsigned i = 0; i < n_; ++i) { da[i] = a % q; a /= q; }
    for (unsigned i = 0; i < n_; ++i) { db[i] = b % q; b /= q; }
    std::vector<unsigned> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < n_; ++j)
            if (db[j]) prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
    for (unsigned d = 2 * n_ - 2; d >= n_ && d < 2 * n_; --d) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < n_; ++i)
            prod[d - n_ + i] = base_->sub(prod[d - n_ + i], base_->mul(c, mod_[i]));
    }
    std::uint64_t r = 0;
    for (unsigned i = n_; i-- > 0;) r = r * q + prod[i];
    return r;
}

std::uint64_t ExtField::pow_poly(std::uint64_t a, std::uint64_t exp) const {
    if (a == 0) return exp == 0 ? 1 : 0;
    std::uint64_t r = 1, base = a;
    exp %= period();
    while (exp) {
        if (exp & 1) r = mul_poly(r, base);
        base = mul_poly(base, base);
        exp >>= 1;
    }
    return r;
}

std::uint64_t ExtField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a >= size_ || b >= size_) throw std::invalid_argument("element index out of range");
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % period()];
    return mul_poly(a, b);
}

std::uint64_t ExtField::inv(std::uint64_t a) const {
    if (a >= size_) throw std::invalid_argument("element index out of range");
    if (a == 0) throw std::domain_error("inversion of zero");
    if (!exp_.empty()) return exp_[(period() - log_[a]) % period()];
    return pow_poly(a, period() - 1);
}

std::uint64_t ExtField::pow(std::uint64_t a, std::uint64_t exp) const {
    if (a >= size_) throw std::invalid_argument("element index out of range");
    if (a == 0) return exp == 0 ? 1 : 0;
    if (!exp_.empty()) {
        // log fits 32 bits, exponent reduced first: no overflow
        unsigned __int128 l = static_cast<unsigned __int128>(log_[a]) * (exp % period());
        return exp_[static_cast<std::uint64_t>(l % period())];
    }
    return pow_poly(a, exp);
}

std::uint64_t ExtField::element_order(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = period();
    for (auto f : prime_factors(period()))
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    return ord;
}

std::uint64_t ExtField::dlog(std::uint64_t x) const {
    if (exp_.empty()) throw CapExceeded("discrete log requires tables (q^n over log-table cap)");
    if (x == 0 || x >= size_) throw std::domain_error("dlog of zero or out-of-range element");
    return log_[x];
}

std::uint64_t ExtField::alpha_pow(std::uint64_t i) const {
    if (!exp_.empty()) return exp_[i % period()];
    return pow_poly(alpha_, i);
}

std::vector<unsigned> ExtField::coords(std::uint64_t x) const {
    std::vector<unsigned> c(n_);
    for (unsigned i = 0; i < n_; ++i) { c[i] = x % base_->q(); x /= base_->q(); }
    return c;
}

std::uint64_t ExtField::from_coords(const std::vector<unsigned>& c) const {
    if (c.size() != n_) throw std::invalid_argument("coordinate vector has wrong length");
    std::uint64_t x = 0;
    for (unsigned i = n_; i-- > 0;) {
        if (c[i] >= base_->q()) throw std::invalid_argument("coordinate out of range");
        x = x * base_->q() + c[i];
    }
    return x;
}

ExtFieldPtr make_ext_field(FieldPtr base, unsigned degree, std::vector<unsigned> modulus) {
    return std::make_shared<ExtField>(std::move(base), degree, std::move(modulus));
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || !(*a.field == *b.field))
        throw std::invalid_argument("elements from different fields");
}
}  // namespace

// result values are computed before the aggregate is formed: GCC 11 fails
// to destroy already-built members of a braced return value when a later
// initializer throws, which would leak a field reference
FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(*this, o);
    unsigned r = field->add(value, o.value);
    return {field, r};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(*this, o);
    unsigned r = field->sub(value, o.value);
    return {field, r};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(*this, o);
    unsigned r = field->mul(value, o.value);
    return {field, r};
}

FieldElement FieldElement::inverse() const {
    unsigned r = field->inv(value);
    return {field, r};
}

FieldElement FieldElement::pow(std::uint64_t exp) const {
    unsigned r = field->pow(value, exp);
    return {field, r};
}

bool FieldElement::operator==(const FieldElement& o) const {
    return *field == *o.field && value == o.value;
}

}  // namespace grasscode
