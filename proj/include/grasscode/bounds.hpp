#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "grasscode/bigint.hpp"

namespace grasscode {

/// Gaussian binomial [n k]_q: the number of k-subspaces of F_q^n.
/// Exact product formula; symmetric in k and n-k.
BigInt gaussian_binomial(std::uint64_t q, unsigned n, unsigned k);

/// The unrounded packing/covering reference [n k-d]_q / [k k-d]_q.
BigRat packing_ratio(std::uint64_t q, unsigned n, unsigned k, unsigned delta);

/// Packing bound: floor of the reference ratio.
BigInt packing_bound(std::uint64_t q, unsigned n, unsigned k, unsigned delta);

/// Covering bound: ceiling of the reference ratio.
BigInt covering_bound(std::uint64_t q, unsigned n, unsigned k, unsigned delta);

/// Iterated Johnson bound: nested floors of (q^(n-i)-1)/(q^(k-i)-1),
/// evaluated innermost-out, with value 1 once the dimension drops to
/// delta or below. Always at most the packing bound.
BigInt iterated_johnson(std::uint64_t q, unsigned n, unsigned k, unsigned delta);

/// Iterated Schonheim bound: r nested ceilings, innermost term
/// (q^(n-r+1)-1)/(q^(k-r+1)-1). Always at least the covering bound.
BigInt iterated_schonheim(std::uint64_t q, unsigned n, unsigned k, unsigned r);

enum class Exactness { Lower, Upper, Exact };

struct BoundReport {
    std::string kind;
    std::map<std::string, long long> params;
    BigInt value;
    Exactness exactness = Exactness::Exact;
    std::optional<std::string> caveat;  // e.g. "for all sufficiently large n"
};

std::string exactness_name(Exactness e);

// Closed-form values:
//   spread_even   (q, n even)            exact (q^n-1)/(q^2-1)
//   spread_odd_lb (q, n odd)             lower (q^n-1)/(q^2-1) - q^2/(q+1)
//   turan_thm5    (q, v>=2, m>=2, delta) exact (q^(vm)-1)/(q^m-1)
//   covering_cor3 (q, n, r with r+1 | n) exact (q^n-1)/(q^(n/(r+1))-1)
//   covering_thm6 (q, t, r)              exact for all sufficiently large n,
//                                        (q^((r+1)t)-1)/(q^t-1), caveat carried
BoundReport closed_form(const std::string& kind,
                        const std::map<std::string, long long>& params);

struct Ratio {
    BigRat value;         // fully reduced
    std::string decimal;  // 4 places, round half to even
};

/// achieved / reference, as an exact reduced fraction plus its decimal
/// rendering. reference must be positive.
Ratio bound_ratio(const BigInt& achieved, const BigRat& reference);

}  // namespace grasscode
