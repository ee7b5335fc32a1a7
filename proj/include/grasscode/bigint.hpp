#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace grasscode {

// Every count and bound in this project is exact: arbitrary-precision
// integers and rationals, no floating point.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt big_pow(std::uint64_t base, unsigned exp);

// Floor / ceiling of a/b for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt floor_rat(const BigRat& x);
BigInt ceil_rat(const BigRat& x);

// Fixed-point decimal rendering of a rational, round half to even.
std::string decimal_string(const BigRat& x, int places);

}  // namespace grasscode
