#include <doctest.h>

#include <algorithm>
#include <set>

#include "grasscode/bounds.hpp"
#include "grasscode/designs.hpp"
#include "grasscode/matcher.hpp"
#include "test_util.hpp"

using namespace grasscode;
using grasscode::test::collect;

TEST_CASE("spread at (2,4,2): five pairwise-disjoint planes") {
    auto spread = spread_construct(make_field(2), 4, 2);
    CHECK(spread.size() == 5);
    auto rep = verify_code(spread, 4);
    CHECK(rep.valid);
    CHECK(rep.min_distance == 4);
    // Steiner: every point covered exactly once
    auto cov = verify_covering(spread, 1);
    CHECK(cov.valid);
    CHECK(cov.min_cover == 1);
    CHECK(cov.max_cover == 1);
}

TEST_CASE("spread at (2,6,3) partitions the nonzero vectors") {
    auto spread = spread_construct(make_field(2), 6, 3);
    CHECK(spread.size() == 9);  // (2^6-1)/(2^3-1)
    CHECK(verify_code(spread, 6).valid);
    auto cov = verify_covering(spread, 1);
    CHECK(cov.valid);
    CHECK(cov.min_cover == 1);
    CHECK(cov.max_cover == 1);
}

TEST_CASE("spread edge cases") {
    auto full = spread_construct(make_field(3), 3, 3);
    CHECK(full.size() == 1);
    CHECK(full.members[0] == Subspace::identity(3, 3));
    CHECK_THROWS_AS(spread_construct(make_field(2), 5, 2), std::invalid_argument);
}

TEST_CASE("verify_code on the full Grassmannian finds a violating pair") {
    auto F = make_field(2);
    auto all = collect(GrassmannStream(F, 4, 2));
    auto code = make_code(F, 4, 2, all);
    auto rep = verify_code(code, 4);
    CHECK(!rep.valid);
    CHECK(rep.min_distance == 2);
    REQUIRE(rep.violation);
    CHECK(intersection_dim(*F, rep.violation->first, rep.violation->second) == 1);
}

TEST_CASE("verify_code: single member is valid at any even distance") {
    auto F = make_field(2);
    auto one = make_code(F, 4, 2, {canonicalize(*F, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)});
    auto rep = verify_code(one, 4);
    CHECK(rep.valid);
    CHECK(!rep.min_distance);
    CHECK_THROWS_AS(verify_code(one, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_code(one, 6), std::invalid_argument);
}

TEST_CASE("verify_covering catches the three points of a removed spread member") {
    auto spread = spread_construct(make_field(2), 4, 2);
    std::vector<Subspace> four(spread.members.begin(), spread.members.end() - 1);
    auto partial = make_code(spread.field, 4, 2, four);
    auto rep = verify_covering(partial, 1);
    CHECK(!rep.valid);
    CHECK(rep.uncovered == 3);
    REQUIRE(rep.witness);
    CHECK(contains(*spread.field, spread.members.back(), *rep.witness));
}

TEST_CASE("verify_covering: the full space covers trivially") {
    auto F = make_field(2);
    auto whole = make_code(F, 3, 3, {Subspace::identity(2, 3)});
    for (unsigned r = 0; r <= 3; ++r) CHECK(verify_covering(whole, r).valid);
}

TEST_CASE("verify_turan examples") {
    auto F = make_field(2);
    // the zero subspace is contained in everything
    auto zero = make_code(F, 4, 0, {Subspace::zero(2, 4)});
    CHECK(verify_turan(zero, 2).valid);

    // a single point misses some 2-subspace
    auto pt = make_code(F, 4, 1, {canonicalize(*F, {{1, 0, 0, 0}}, 4)});
    auto rep = verify_turan(pt, 2);
    CHECK(!rep.valid);
    REQUIRE(rep.witness);
    CHECK(!contains(*F, *rep.witness, pt.members[0]));
}

TEST_CASE("three concurrent lines of PG(2,2) dualize to a Turan design") {
    auto F = make_field(2);
    // the three 2-subspaces of F_2^3 through the common point e1
    auto pencil = collect(SuperspaceStream(F, canonicalize(*F, {{1, 0, 0}}, 3), 2));
    REQUIRE(pencil.size() == 3);
    auto covering = make_code(F, 3, 2, pencil);
    CHECK(verify_covering(covering, 1).valid);  // they cover all 7 points
    auto turan = turan_dual(covering, DesignKind::Covering, 1);
    CHECK(turan.size() == 3);
    CHECK(turan.k == 1);
    CHECK(verify_turan(turan, 2).valid);  // T_2(3,2,1)
}

TEST_CASE("code_to_covering leaves the spread fixed") {
    auto spread = spread_construct(make_field(2), 4, 2);
    auto cov = code_to_covering(spread, 1);
    CHECK(cov.members == spread.members);
}

TEST_CASE("code_to_covering from a single plane stays within the budget") {
    auto F = make_field(2);
    auto one = make_code(F, 4, 2, {canonicalize(*F, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)});
    auto before = verify_covering(one, 1);
    CHECK(before.uncovered == 12);  // 15 points minus the plane's 3
    auto cov = code_to_covering(one, 1);
    CHECK(cov.size() <= 13);  // 1 + Upsilon = 1 + (15 - 3)
    CHECK(verify_covering(cov, 1).valid);
}

TEST_CASE("code_to_covering satisfies the Upsilon bound with recomputed slack") {
    auto F = make_field(2);
    // a deliberately sparse distance-4 code at (2,6,3)
    auto spread = spread_construct(F, 6, 3);
    std::vector<Subspace> some(spread.members.begin(), spread.members.begin() + 4);
    auto code = make_code(F, 6, 3, some);
    // recompute Upsilon independently from cover counts
    auto stats = verify_covering(code, 2);
    BigInt upsilon = gaussian_binomial(2, 6, 2) - gaussian_binomial(2, 3, 2) * 4;
    CHECK(BigInt(std::to_string(stats.uncovered)) == upsilon);
    auto cov = code_to_covering(code, 1);
    CHECK(verify_covering(cov, 2).valid);
    CHECK(BigInt(static_cast<unsigned long>(cov.size())) <= BigInt(4) + upsilon);
}

TEST_CASE("completion and thinning size bounds hold across q=2, n <= 6, all valid (k, delta)") {
    // code_to_covering and covering_to_code carry internal asserts for their
    // size bounds; this sweep drives them with greedy witnesses
    auto F = make_field(2);
    for (unsigned n = 3; n <= 6; ++n)
        for (unsigned k = 2; k < n; ++k)
            for (unsigned delta = 1; delta < k; ++delta) {
                IncidenceIndex idx(F, n, k, delta);
                auto code = matching_to_code(idx, greedy_matching(idx, 1));
                auto cov = code_to_covering(code, delta);
                CHECK(verify_covering(cov, k - delta).valid);
                auto thinned = covering_to_code(cov, delta);
                CHECK(verify_code(thinned, 2 * delta + 2).valid);
                CHECK(thinned.size() >= 1);
            }
}

TEST_CASE("covering_to_code leaves a Steiner structure fixed") {
    auto spread = spread_construct(make_field(2), 4, 2);
    auto code = covering_to_code(spread, 1);
    CHECK(code.members == spread.members);
    // both conversion bounds are tight: 5 = 5 + 15 - 15
    CHECK(BigInt(5) == BigInt(5) + gaussian_binomial(2, 4, 1) - gaussian_binomial(2, 2, 1) * 5);
}

TEST_CASE("covering_to_code thins the full Grassmannian to a valid code") {
    auto F = make_field(2);
    auto all = make_code(F, 4, 2, collect(GrassmannStream(F, 4, 2)));
    REQUIRE(all.size() == 35);
    auto code = covering_to_code(all, 1);
    CHECK(code.size() > 0);
    CHECK(verify_code(code, 4).valid);
}

TEST_CASE("conversions refuse invalid inputs") {
    auto F = make_field(2);
    auto all = make_code(F, 4, 2, collect(GrassmannStream(F, 4, 2)));
    CHECK_THROWS_AS(code_to_covering(all, 1), VerificationFailure);  // not distance 4
    auto spread = spread_construct(F, 4, 2);
    std::vector<Subspace> four(spread.members.begin(), spread.members.end() - 1);
    auto partial = make_code(F, 4, 2, four);
    CHECK_THROWS_AS(covering_to_code(partial, 1), VerificationFailure);  // not a covering
}

TEST_CASE("spread needs a table-backed extension and rejects bad inputs") {
    grasscode::test::CapGuard guard;
    caps().log_table = 8;
    CHECK_THROWS_AS(spread_construct(make_field(2), 4, 2), CapExceeded);
}

TEST_CASE("lift and turan-dual refuse unverified inputs") {
    auto F = make_field(2);
    auto spread = spread_construct(F, 4, 2);
    std::vector<Subspace> four(spread.members.begin(), spread.members.end() - 1);
    auto not_covering = make_code(F, 4, 2, four);
    CHECK_THROWS_AS(lift_covering(not_covering, 1), VerificationFailure);
    CHECK_THROWS_AS(turan_dual(not_covering, DesignKind::Covering, 1), VerificationFailure);
    auto pt = make_code(F, 4, 1, {canonicalize(*F, {{1, 0, 0, 0}}, 4)});
    CHECK_THROWS_AS(turan_dual(pt, DesignKind::Turan, 2), VerificationFailure);
}

TEST_CASE("dual code: involution, size and distances preserved") {
    auto spread = spread_construct(make_field(2), 4, 2);
    auto dual = dual_code(spread, 4);
    CHECK(dual.size() == 5);
    CHECK(dual.k == 2);
    CHECK(verify_code(dual, 4).valid);
    auto back = dual_code(dual, 4);
    CHECK(back.members == spread.members);
}

TEST_CASE("dual code preserves every pairwise distance at (2,6,3)") {
    auto F = make_field(2);
    auto spread = spread_construct(F, 6, 3);
    auto dual = dual_code(spread, 6);
    REQUIRE(dual.size() == spread.size());
    // members complement in order-reversing fashion, so match by member
    for (std::size_t i = 0; i < spread.size(); ++i)
        for (std::size_t j = i + 1; j < spread.size(); ++j) {
            unsigned d = subspace_distance(*F, spread.members[i], spread.members[j]);
            auto ci = orthogonal_complement(*F, spread.members[i]);
            auto cj = orthogonal_complement(*F, spread.members[j]);
            CHECK(subspace_distance(*F, ci, cj) == d);
        }
}

TEST_CASE("lift_covering embeds a covering one dimension up") {
    auto F = make_field(2);
    auto spread = spread_construct(F, 4, 2);
    auto lifted = lift_covering(spread, 1);
    CHECK(lifted.n == 5);
    CHECK(lifted.k == 3);
    CHECK(lifted.size() == 5);
    auto rep = verify_covering(lifted, 1);  // all 31 points of F_2^5 covered
    CHECK(rep.valid);

    auto whole = make_code(F, 3, 3, {Subspace::identity(2, 3)});
    auto lifted_whole = lift_covering(whole, 1);
    CHECK(lifted_whole.members[0] == Subspace::identity(2, 4));
}

TEST_CASE("turan_dual is an involution mapping the spread covering to T_2(4,3,2)") {
    auto spread = spread_construct(make_field(2), 4, 2);
    auto turan = turan_dual(spread, DesignKind::Covering, 1);
    CHECK(turan.size() == 5);
    CHECK(turan.k == 2);  // members have dimension n-k = 2
    CHECK(verify_turan(turan, 3).valid);  // every 3-subspace contains a member
    auto back = turan_dual(turan, DesignKind::Turan, 3);
    CHECK(back.members == spread.members);
}

TEST_CASE("turan_dual of the zero-subspace design is the full space") {
    auto F = make_field(2);
    auto zero = make_code(F, 4, 0, {Subspace::zero(2, 4)});
    auto cov = turan_dual(zero, DesignKind::Turan, 4);
    REQUIRE(cov.size() == 1);
    CHECK(cov.members[0] == Subspace::identity(2, 4));
    CHECK(verify_covering(cov, 0).valid);
}
