#include <algorithm>
#include <bit>
#include <set>

#include <gtest/gtest.h>

#include "qsuper/brundan.hpp"

using namespace qsuper;

namespace {

laurent_poly mono(exponents e, int c = 1) {
    auto n = e.size();
    return laurent_poly::monomial(n, std::move(e), c);
}

std::vector<weight> dominant_box(std::size_t n, int bound) {
    std::vector<weight> out;
    for_each_dominant(n, bound, [&](const weight& w) { out.push_back(w); });
    return out;
}

// Every way to place floor(z/2) nested pairs on the zero block of lambda.
std::vector<std::vector<index_pair>> zero_pair_choices(const weight& lambda) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < lambda.rank(); ++i)
        if (lambda[i] == 0)
            zeros.push_back(i);
    const std::size_t used = zeros.size() / 2 * 2;
    std::vector<std::vector<index_pair>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zeros.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != used)
            continue;
        std::vector<std::size_t> chosen;
        for (std::size_t b = 0; b < zeros.size(); ++b)
            if ((mask >> b) & 1u)
                chosen.push_back(zeros[b]);
        std::vector<index_pair> pairs;
        for (std::size_t a = 0, b = chosen.size(); a + 1 < b; ++a, --b)
            pairs.push_back({chosen[a], chosen[b - 1]});
        out.push_back(std::move(pairs));
    }
    return out;
}

} // namespace

TEST(Brundan, PairingAllZeros) {
    auto pd = pairing({0, 0, 0});
    ASSERT_EQ(pd.p(), 1u);
    EXPECT_EQ(pd.pairs[0], (index_pair{0, 2}));
    EXPECT_EQ(pd.isets[0], (std::set<int>{0}));
    // n - ell = 3 is odd, so k' < k
    EXPECT_EQ(pd.k_prime[0], 1);
    EXPECT_EQ(pd.k[0], 2);
    EXPECT_EQ(pd.isets[1], (std::set<int>{0, 1, 2}));
}

TEST(Brundan, PairingSimple) {
    auto pd = pairing({1, -1});
    ASSERT_EQ(pd.p(), 1u);
    EXPECT_EQ(pd.pairs[0], (index_pair{0, 1}));
    EXPECT_EQ(pd.isets[0], (std::set<int>{1}));
    EXPECT_EQ(pd.k[0], 2);
    EXPECT_FALSE(pd.k_prime[0].has_value());

    EXPECT_EQ(pairing({2, -1}).p(), 0u);
    EXPECT_THROW(pairing({0, 1}), non_dominant);
}

TEST(Brundan, PairingMixed) {
    // I0 = {0,1,3}; k1 = 4, k2 = 2, then the zero pair takes 5 < 6 since
    // n - ell = 2 is even.
    auto pd = pairing({3, 1, 0, 0, -1, -3});
    ASSERT_EQ(pd.p(), 3u);
    EXPECT_EQ(pd.pairs, (std::vector<index_pair>{{0, 5}, {1, 4}, {2, 3}}));
    EXPECT_EQ(pd.k, (std::vector<int>{4, 2, 5}));
    EXPECT_EQ(pd.k_prime[2], 6);
    EXPECT_EQ(pd.isets.back(), (std::set<int>{0, 1, 2, 3, 4, 5, 6}));

    // n=2 zeros: n - ell even, k = 1 < k' = 2
    auto z2 = pairing({0, 0});
    EXPECT_EQ(z2.k[0], 1);
    EXPECT_EQ(z2.k_prime[0], 2);
}

TEST(Brundan, RTheta) {
    EXPECT_EQ(r_theta({2, 1, -1}, theta_vector::from_mask(1, 0)), weight({2, 1, -1}));
    EXPECT_EQ(r_theta({0, 0, 0}, theta_vector::from_mask(1, 1)), weight({2, 0, -2}));
    // the pair (1,-1) moves to (k,-k) with k = 2
    EXPECT_EQ(r_theta({1, -1}, theta_vector::from_mask(1, 1)), weight({2, -2}));
    // k = 2 avoids I_0 = {1,3}; adding k instead would collide with the 3
    EXPECT_EQ(r_theta({3, 1, -1}, theta_vector::from_mask(1, 1)), weight({3, 2, -2}));
    EXPECT_THROW(r_theta({1, -1}, theta_vector::from_mask(2, 0)), domain_error);
    EXPECT_THROW(r_theta({1, 1}, theta_vector{}), non_dominant);
}

TEST(Brundan, BlockClosure) {
    EXPECT_EQ(block_closure({1, -1}), (std::vector<weight>{{1, -1}, {0, 0}}));
    EXPECT_EQ(block_closure({0, 0, 0}), (std::vector<weight>{{0, 0, 0}}));
    EXPECT_EQ(block_closure({2, -1}), (std::vector<weight>{{2, -1}}));
    // (0,0,0) -> (2,0,-2) directly
    auto b = block_closure(two_rho(3));
    EXPECT_NE(std::find(b.begin(), b.end(), weight({0, 0, 0})), b.end());
}

TEST(Brundan, DecomposeEuler) {
    auto d = decompose_euler({1, -1});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].lambda, weight({1, -1}));
    EXPECT_EQ(d[0].d, 1);
    EXPECT_EQ(d[1].lambda, weight({0, 0}));
    EXPECT_EQ(d[1].d, 2);

    auto iso = decompose_euler({2, -1});
    ASSERT_EQ(iso.size(), 1u);
    EXPECT_EQ(iso[0].lambda, weight({2, -1}));
    EXPECT_EQ(iso[0].d, 1);

    bool found = false;
    for (const auto& t : decompose_euler(two_rho(3)))
        if (t.lambda == weight({0, 0, 0})) {
            found = true;
            EXPECT_EQ(t.d, 2);
        }
    EXPECT_TRUE(found);
}

TEST(Brundan, IrreducibleCharacter) {
    EXPECT_EQ(irreducible_character({0, 0}), laurent_poly::constant(2, 1));
    EXPECT_EQ(irreducible_character({1, -1}), mono({1, -1}, 2) + mono({0, 0}, 2) + mono({-1, 1}, 2));
    EXPECT_EQ(irreducible_character({2, -1}), schur_p({2, -1}) * integer(2));
    EXPECT_THROW(irreducible_character({1, 1}), non_dominant);
}

TEST(Brundan, Branching) {
    EXPECT_EQ(branching({0, 0}), (schur_expansion{{weight{0, 0}, 1}}));
    EXPECT_EQ(branching({1, -1}), (schur_expansion{{weight{1, -1}, 2}}));
    // 2 P_(2,-1) = 2 s_(1,0) s_(1,-1) = 2 s_(2,-1) + 2 s_(1,0)
    EXPECT_EQ(branching({2, -1}), (schur_expansion{{weight{2, -1}, 2}, {weight{1, 0}, 2}}));
    EXPECT_EQ(trivial_multiplicity({0, 0}), 1);
    EXPECT_EQ(trivial_multiplicity({1, -1}), 0);
}

TEST(Brundan, RankTwoAtypicalSeries) {
    // [E(b,-b)] = [L(b,-b)] + [L(b-1,-b+1)] for b >= 2 and
    // [E(1,-1)] = [L(1,-1)] + 2[L(0,0)], so ch L(b,-b) = 2 s_(b,-b).
    character_solver solver(2);
    for (int b = 1; b <= 6; ++b) {
        weight nu{b, -b};
        EXPECT_EQ(solver.irreducible(nu), schur(nu) * integer(2)) << b;
        EXPECT_EQ(solver.decomposition(nu).size(), 2u);
    }
}

TEST(Brundan, SupercharacterVerdict) {
    EXPECT_EQ(supercharacter_verdict({0, 0, 0}), 1);
    EXPECT_EQ(supercharacter_verdict({2, 0, -2}), 0);
    EXPECT_EQ(supercharacter_verdict({3, 1, 0, -1}), 0);
}

TEST(Brundan, G0CoefficientDistinct) {
    for (std::size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(g0_coefficient_distinct(two_rho(n)), 1) << n;
    EXPECT_EQ(g0_coefficient_distinct({2, -1}), 0);
    EXPECT_EQ(g0_coefficient_distinct({3, 0, -3}), 0);
    EXPECT_THROW(g0_coefficient_distinct({1, 0, 0, -1}), non_distinct);
    EXPECT_THROW(g0_coefficient_distinct({0, 1}), non_dominant);
}

TEST(Brundan, SolverRejectsWrongRank) {
    character_solver solver(3);
    EXPECT_THROW(solver.irreducible({1, -1}), rank_mismatch);
}

TEST(BrundanProperty, RThetaMonotoneAndParity) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& lambda : dominant_box(n, 3)) {
            const auto pd = pairing(lambda);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pd.p()); ++mask) {
                auto mu = r_theta(lambda, pd, theta_vector::from_mask(pd.p(), mask));
                ASSERT_TRUE(is_dominant_integral(mu)) << to_string(lambda);
                ASSERT_TRUE(dominance_leq(lambda, mu)) << to_string(lambda) << " " << to_string(mu);
                ASSERT_GE(ell(mu), ell(lambda));
                ASSERT_EQ((ell(mu) - ell(lambda)) % 2, 0u);
            }
        }
}

TEST(BrundanProperty, RaisingZeroPairsGivesDistinctEntries) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& lambda : dominant_box(n, 3)) {
            const auto pd = pairing(lambda);
            theta_vector theta;
            for (std::size_t s = 0; s < pd.p(); ++s)
                theta.bits.push_back(lambda[pd.pairs[s].i] == 0);
            auto psi = r_theta(lambda, pd, theta);
            ASSERT_TRUE(has_distinct_coords(psi)) << to_string(lambda) << " -> " << to_string(psi);
        }
}

TEST(BrundanProperty, ChoiceIndependence) {
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& lambda : dominant_box(n, 2)) {
            const auto canonical = pairing(lambda);
            std::size_t nonzero_pairs = 0;
            while (nonzero_pairs < canonical.p() && lambda[canonical.pairs[nonzero_pairs].i] != 0)
                ++nonzero_pairs;
            for (const auto& zero_pairs : zero_pair_choices(lambda)) {
                pairing_data alt;
                alt.pairs.assign(canonical.pairs.begin(), canonical.pairs.begin() + nonzero_pairs);
                alt.pairs.insert(alt.pairs.end(), zero_pairs.begin(), zero_pairs.end());
                assign_k_values(lambda, alt);
                ASSERT_EQ(alt.p(), canonical.p());
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alt.p()); ++mask) {
                    auto t = theta_vector::from_mask(alt.p(), mask);
                    ASSERT_EQ(r_theta(lambda, alt, t), r_theta(lambda, canonical, t)) << to_string(lambda);
                }
            }
        }
}

TEST(BrundanProperty, BlocksAreUnitriangularAndConsistent) {
    for (std::size_t n = 1; n <= 4; ++n) {
        character_solver solver(n);
        for (const auto& mu : dominant_box(n, n == 4 ? 3 : 4)) {
            const auto& terms = solver.decomposition(mu);
            laurent_poly sum(n);
            bool has_diagonal = false;
            for (const auto& t : terms) {
                ASSERT_TRUE(dominance_leq(t.lambda, mu));
                ASSERT_EQ(t.d, pow2((ell(mu) - ell(t.lambda)) / 2));
                if (t.lambda == mu) {
                    has_diagonal = true;
                    ASSERT_EQ(t.d, 1);
                }
                sum += solver.irreducible(t.lambda) * t.d;
            }
            ASSERT_TRUE(has_diagonal) << to_string(mu);
            ASSERT_EQ(sum, solver.euler(mu)) << to_string(mu);

            const auto& ch = solver.irreducible(mu);
            ASSERT_EQ(ch.coefficient(mu.coords()), pow2(clifford_exponent(mu))) << to_string(mu);
            for (const auto& [lam, c] : solver.branching(mu))
                ASSERT_GT(c, 0);
        }
    }
}

TEST(BrundanProperty, DistinctTargetsUseCeilingExponent) {
    // When mu has distinct entries, 2^{(ell(mu)-ell(lambda))/2} agrees with
    // 2^{ceil((n - ell(lambda) - 1)/2)}.
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& mu : dominant_box(n, 3)) {
            if (!has_distinct_coords(mu))
                continue;
            for (const auto& t : decompose_euler(mu)) {
                std::size_t m = n - ell(t.lambda);
                ASSERT_EQ(t.d, pow2(m / 2)) << to_string(mu) << " " << to_string(t.lambda);
            }
        }
}

TEST(BrundanProperty, TheoremSuite) {
    for (std::size_t n = 1; n <= 4; ++n) {
        character_solver solver(n);
        for (const auto& nu : dominant_box(n, 3)) {
            if (nu.is_zero()) {
                ASSERT_EQ(solver.trivial_multiplicity(nu), 1);
                ASSERT_EQ(solver.supercharacter_verdict(nu), 1);
            } else {
                ASSERT_EQ(solver.trivial_multiplicity(nu), 0) << to_string(nu);
                ASSERT_EQ(solver.supercharacter_verdict(nu), 0) << to_string(nu);
            }
        }
    }
}
