#include "grasscode/bounds.hpp"

#include <stdexcept>

namespace grasscode {

namespace {

void check_range(std::uint64_t q, unsigned n, unsigned k) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (k > n) throw std::invalid_argument("invalid range: k > n");
}

long long param(const std::map<std::string, long long>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("closed_form: missing parameter " + name);
    return it->second;
}

}  // namespace

BigInt gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
    check_range(q, n, k);
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, k - i) - 1;
    }
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

BigRat packing_ratio(std::uint64_t q, unsigned n, unsigned k, unsigned delta) {
    check_range(q, n, k);
    if (delta > k) throw std::invalid_argument("invalid range: delta > k");
    BigRat r(gaussian_binomial(q, n, k - delta), gaussian_binomial(q, k, k - delta));
    r.canonicalize();
    return r;
}

BigInt packing_bound(std::uint64_t q, unsigned n, unsigned k, unsigned delta) {
    return floor_rat(packing_ratio(q, n, k, delta));
}

BigInt covering_bound(std::uint64_t q, unsigned n, unsigned k, unsigned delta) {
    return ceil_rat(packing_ratio(q, n, k, delta));
}

BigInt iterated_johnson(std::uint64_t q, unsigned n, unsigned k, unsigned delta) {
    check_range(q, n, k);
    if (delta > k) throw std::invalid_argument("invalid range: delta > k");
    BigInt v = 1;
    for (unsigned j = delta + 1; j <= k; ++j)
        v = floor_div(v * (big_pow(q, n - k + j) - 1), big_pow(q, j) - 1);
    return v;
}

BigInt iterated_schonheim(std::uint64_t q, unsigned n, unsigned k, unsigned r) {
    check_range(q, n, k);
    if (r < 1 || r > k) throw std::invalid_argument("invalid range: need 1 <= r <= k");
    BigInt v = 1;
    for (unsigned i = r; i >= 1; --i)
        v = ceil_div(v * (big_pow(q, n - i + 1) - 1), big_pow(q, k - i + 1) - 1);
    return v;
}

std::string exactness_name(Exactness e) {
    switch (e) {
        case Exactness::Lower: return "lower";
        case Exactness::Upper: return "upper";
        case Exactness::Exact: return "exact";
    }
    return "?";
}

BoundReport closed_form(const std::string& kind,
                        const std::map<std::string, long long>& params) {
    BoundReport rep;
    rep.kind = kind;
    rep.params = params;
    auto q = static_cast<std::uint64_t>(param(params, "q"));
    if (q < 2) throw std::invalid_argument("q must be at least 2");

    if (kind == "spread_even") {
        long long n = param(params, "n");
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("spread_even requires even n >= 2");
        BigRat v(big_pow(q, n) - 1, big_pow(q, 2) - 1);
        v.canonicalize();
        rep.value = v.get_num();  // exact division
        if (v.get_den() != 1) throw std::logic_error("spread_even value not integral");
        rep.exactness = Exactness::Exact;
    } else if (kind == "spread_odd_lb") {
        long long n = param(params, "n");
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("spread_odd_lb requires odd n >= 3");
        // (q^n-1)/(q^2-1) - q^2/(q+1), integral for odd n
        BigRat v(big_pow(q, n) - 1, big_pow(q, 2) - 1);
        v -= BigRat(big_pow(q, 2), BigInt(std::to_string(q)) + 1);
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("spread_odd_lb value not integral");
        rep.value = v.get_num();
        rep.exactness = Exactness::Lower;
    } else if (kind == "turan_thm5") {
        long long v = param(params, "v"), m = param(params, "m");
        (void)param(params, "delta");
        if (v < 2 || m < 2) throw std::invalid_argument("turan_thm5 requires v >= 2, m >= 2");
        BigRat val(big_pow(q, static_cast<unsigned>(v * m)) - 1,
                   big_pow(q, static_cast<unsigned>(m)) - 1);
        val.canonicalize();
        rep.value = val.get_num();
        rep.exactness = Exactness::Exact;
    } else if (kind == "covering_cor3") {
        long long n = param(params, "n"), r = param(params, "r");
        if (r < 1 || n < 2 || n % (r + 1) != 0)
            throw std::invalid_argument("covering_cor3 requires r+1 dividing n");
        BigRat val(big_pow(q, static_cast<unsigned>(n)) - 1,
                   big_pow(q, static_cast<unsigned>(n / (r + 1))) - 1);
        val.canonicalize();
        rep.value = val.get_num();
        rep.exactness = Exactness::Exact;
    } else if (kind == "covering_thm6") {
        long long t = param(params, "t"), r = param(params, "r");
        if (t < 1 || r < 1) throw std::invalid_argument("covering_thm6 requires t, r >= 1");
        BigRat val(big_pow(q, static_cast<unsigned>((r + 1) * t)) - 1,
                   big_pow(q, static_cast<unsigned>(t)) - 1);
        val.canonicalize();
        rep.value = val.get_num();
        rep.exactness = Exactness::Exact;
        rep.caveat = "for all sufficiently large n";
    } else {
        throw std::invalid_argument("unknown closed form kind: " + kind);
    }
    if (rep.value < 1) throw std::logic_error("bound value below 1");
    return rep;
}

Ratio bound_ratio(const BigInt& achieved, const BigRat& reference) {
    if (reference <= 0) throw std::invalid_argument("reference bound must be positive");
    BigRat r = BigRat(achieved) / reference;
    r.canonicalize();
    return {r, decimal_string(r, 4)};
}

}  // namespace grasscode
