#include "grasscode/bigint.hpp"

#include <stdexcept>

namespace grasscode {

BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(base), 0, 0, &base);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_rat(const BigRat& x) { return floor_div(x.get_num(), x.get_den()); }

BigInt ceil_rat(const BigRat& x) { return ceil_div(x.get_num(), x.get_den()); }

std::string decimal_string(const BigRat& x, int places) {
    if (places < 0) throw std::invalid_argument("decimal_string: negative places");
    BigInt num = x.get_num();
    const BigInt& den = x.get_den();  // canonical: den > 0
    bool neg = num < 0;
    if (neg) num = -num;

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    BigInt scaled = num * scale;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

    // round half to even on the final digit
    BigInt twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (neg && q != 0) out += '-';
    if (places == 0) {
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - places);
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

}  // namespace grasscode
