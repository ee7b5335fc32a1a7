#include <doctest.h>

#include "grasscode/bounds.hpp"

using namespace grasscode;

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(2, 4, 0) == 1);
    CHECK(gaussian_binomial(5, 7, 0) == 1);
    // independent big-integer evaluation of the product at (2,6,3)
    BigInt by_hand = BigInt(63) * 31 * 15 / (BigInt(7) * 3 * 1);
    CHECK(gaussian_binomial(2, 6, 3) == by_hand);
    CHECK(gaussian_binomial(2, 6, 3) == 1395);
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_binomial(1, 3, 1), std::invalid_argument);
}

TEST_CASE("gaussian binomial symmetry over the grid") {
    for (std::uint64_t q : {2, 3})
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(q, n, k) == gaussian_binomial(q, n, n - k));
}

TEST_CASE("packing bound") {
    CHECK(packing_bound(2, 4, 2, 1) == 5);
    CHECK(packing_bound(2, 6, 3, 1) == 93);  // 651/7 exactly
    BigRat expected(651, 7);
    expected.canonicalize();
    CHECK(packing_ratio(2, 6, 3, 1) == expected);
    CHECK(packing_bound(2, 6, 3, 3) == 1);   // delta = k
    CHECK(packing_bound(3, 5, 2, 2) == 1);
}

TEST_CASE("iterated Johnson bound") {
    CHECK(iterated_johnson(2, 4, 2, 1) == 5);  // floor(15/3)
    // floor((63/7) * floor(31/3)) = floor(9 * 10) = 90, strictly below packing's 93
    CHECK(iterated_johnson(2, 6, 3, 1) == 90);
    CHECK(iterated_johnson(2, 6, 3, 3) == 1);
    CHECK(iterated_johnson(2, 9, 4, 4) == 1);
}

TEST_CASE("covering bound") {
    CHECK(covering_bound(2, 4, 2, 1) == 5);
    CHECK(covering_bound(2, 6, 3, 1) == 93);
    CHECK(covering_bound(2, 5, 2, 0) == gaussian_binomial(2, 5, 2));  // delta = 0
}

TEST_CASE("iterated Schonheim bound") {
    CHECK(iterated_schonheim(2, 4, 2, 1) == 5);           // ceil(15/3)
    CHECK(iterated_schonheim(2, 6, 3, 2) == 9 * 11);      // ceil(9 * ceil(31/3)) = 99
    CHECK(iterated_schonheim(2, 3, 3, 3) == 1);           // whole space covers itself
    CHECK_THROWS_AS(iterated_schonheim(2, 6, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(iterated_schonheim(2, 6, 3, 4), std::invalid_argument);
}

TEST_CASE("dominance over the full grid") {
    for (std::uint64_t q : {2, 3}) {
        for (unsigned n = 1; n <= 12; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                for (unsigned delta = 0; delta <= k; ++delta) {
                    CHECK(iterated_johnson(q, n, k, delta) <= packing_bound(q, n, k, delta));
                    CHECK(iterated_johnson(q, n, k, delta) >= 1);
                    if (delta < k)
                        CHECK(iterated_schonheim(q, n, k, k - delta) >=
                              covering_bound(q, n, k, delta));
                }
            }
        }
    }
}

TEST_CASE("Johnson single-step recursion holds by construction") {
    for (std::uint64_t q : {2, 3})
        for (unsigned n = 2; n <= 10; ++n)
            for (unsigned k = 1; k <= n; ++k)
                for (unsigned delta = 0; delta < k; ++delta) {
                    BigInt step = floor_div((big_pow(q, n) - 1) *
                                                iterated_johnson(q, n - 1, k - 1, delta),
                                            big_pow(q, k) - 1);
                    CHECK(iterated_johnson(q, n, k, delta) == step);
                }
}

TEST_CASE("closed forms") {
    auto spread = closed_form("spread_even", {{"q", 2}, {"n", 4}});
    CHECK(spread.value == 5);
    CHECK(spread.exactness == Exactness::Exact);
    CHECK(!spread.caveat);

    auto odd = closed_form("spread_odd_lb", {{"q", 2}, {"n", 5}});
    CHECK(odd.value == 9);  // 31/3 - 4/3
    CHECK(odd.exactness == Exactness::Lower);

    auto turan = closed_form("turan_thm5", {{"q", 2}, {"v", 2}, {"m", 2}, {"delta", 0}});
    CHECK(turan.value == 5);
    CHECK(turan.exactness == Exactness::Exact);

    auto cor3 = closed_form("covering_cor3", {{"q", 2}, {"n", 4}, {"r", 1}});
    CHECK(cor3.value == 5);
    CHECK(cor3.exactness == Exactness::Exact);

    auto thm6 = closed_form("covering_thm6", {{"q", 2}, {"t", 1}, {"r", 1}});
    CHECK(thm6.value == 3);
    CHECK(thm6.exactness == Exactness::Exact);
    CHECK(thm6.caveat == "for all sufficiently large n");

    CHECK_THROWS_AS(closed_form("spread_even", {{"q", 2}, {"n", 5}}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form("covering_cor3", {{"q", 2}, {"n", 5}, {"r", 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form("turan_thm5", {{"q", 2}, {"v", 1}, {"m", 2}, {"delta", 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form("nonsense", {{"q", 2}}), std::invalid_argument);
}

TEST_CASE("iterated Schonheim collapses to the fixed covering value for large n") {
    // with n-k = t and r fixed, the nested ceilings settle at
    // (q^((r+1)t)-1)/(q^t-1) once n is large enough; here n >= t+r+2 suffices
    for (unsigned q : {2u, 3u})
        for (long long t : {1, 2})
            for (long long r : {1, 2}) {
                auto cf = closed_form("covering_thm6", {{"q", q}, {"t", t}, {"r", r}});
                for (unsigned n = static_cast<unsigned>(t + r) + 2; n <= 16; ++n)
                    CHECK(iterated_schonheim(q, n, n - static_cast<unsigned>(t),
                                             static_cast<unsigned>(r)) == cf.value);
            }
}

TEST_CASE("smallest covering_cor3 case: all points of the projective line") {
    CHECK(closed_form("covering_cor3", {{"q", 2}, {"n", 2}, {"r", 1}}).value == 3);
    CHECK(closed_form("covering_cor3", {{"q", 5}, {"n", 2}, {"r", 1}}).value == 6);
}

TEST_CASE("bound ratios") {
    auto unit = bound_ratio(5, BigRat(5));
    CHECK(unit.value == 1);
    CHECK(unit.decimal == "1.0000");

    auto r = bound_ratio(45, BigRat(651, 7));
    CHECK(r.value == BigRat(15, 31));  // 315/651 reduced
    CHECK(r.decimal == "0.4839");

    CHECK_THROWS_AS(bound_ratio(1, BigRat(0)), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(decimal_string(BigRat(12345, 100000), 4) == "0.1234");  // half, last digit even
    CHECK(decimal_string(BigRat(12355, 100000), 4) == "0.1236");  // half, last digit odd
    CHECK(decimal_string(BigRat(1, 3), 4) == "0.3333");
    CHECK(decimal_string(BigRat(2, 3), 4) == "0.6667");
    CHECK(decimal_string(BigRat(7), 4) == "7.0000");
    CHECK(decimal_string(BigRat(-1, 8), 3) == "-0.125");
}
