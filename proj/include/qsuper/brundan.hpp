#ifndef QSUPER_BRUNDAN_HPP
#define QSUPER_BRUNDAN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"
#include "weights.hpp"

namespace qsuper {

/// Positions (0-based) of one zero-sum pair lambda_i + lambda_j = 0, i < j.
struct index_pair {
    std::size_t i;
    std::size_t j;

    friend bool operator==(const index_pair&, const index_pair&) = default;
};

/**
 * Maximal nested zero-sum pairing of a dominant integral weight together
 * with the integers k_s used by the raising operator R_theta.
 *
 * pairs[s] = (i_s, j_s) with i_1 < ... < i_p < j_p < ... < j_1. isets[s]
 * is I_s, so isets has p + 1 entries. k_prime[s] is set only for pairs
 * of zeros.
 */
struct pairing_data {
    std::vector<index_pair> pairs;
    std::vector<int> k;
    std::vector<std::optional<int>> k_prime;
    std::vector<std::set<int>> isets;

    std::size_t p() const noexcept { return pairs.size(); }
};

/// theta in Z_2^p.
struct theta_vector {
    std::vector<bool> bits;

    static theta_vector from_mask(std::size_t p, std::uint64_t mask) {
        theta_vector t;
        t.bits.resize(p);
        for (std::size_t s = 0; s < p; ++s)
            t.bits[s] = (mask >> s) & 1u;
        return t;
    }

    std::size_t size() const noexcept { return bits.size(); }
};

namespace detail {

inline int smallest_absent_above(int floor, const std::set<int>& taken) {
    int k = floor + 1;
    while (taken.count(k))
        ++k;
    return k;
}

} // namespace detail

/// Fills k, k_prime and isets for a weight whose pairs are already chosen.
inline void assign_k_values(const weight& lambda, pairing_data& pd) {
    const std::size_t n = lambda.rank();
    const bool zeros_even = (n - ell(lambda)) % 2 == 0;
    std::set<int> current;
    for (int c : lambda)
        current.insert(std::abs(c));
    pd.k.clear();
    pd.k_prime.clear();
    pd.isets.assign(1, current);
    for (const auto& pr : pd.pairs) {
        int a = lambda[pr.i];
        if (a > 0) {
            int k = detail::smallest_absent_above(a, current);
            current.insert(k);
            pd.k.push_back(k);
            pd.k_prime.push_back(std::nullopt);
        } else {
            int lo = detail::smallest_absent_above(0, current);
            current.insert(lo);
            int hi = detail::smallest_absent_above(lo, current);
            current.insert(hi);
            // k < k' when n - ell(lambda) is even, k' < k when odd.
            pd.k.push_back(zeros_even ? lo : hi);
            pd.k_prime.push_back(zeros_even ? hi : lo);
        }
        pd.isets.push_back(current);
    }
}

/**
 * Canonical maximal nested pairing: each positive value a is paired with
 * the position of -a (larger a outermost), then zeros are paired
 * outermost-first inside the zero block.
 */
inline pairing_data pairing(const weight& lambda) {
    require_dominant(lambda, "pairing");
    const std::size_t n = lambda.rank();
    pairing_data pd;
    for (std::size_t i = 0; i < n && lambda[i] > 0; ++i)
        for (std::size_t j = n; j-- > i + 1;)
            if (lambda[j] == -lambda[i]) {
                pd.pairs.push_back({i, j});
                break;
            }

    std::size_t first_zero = n, last_zero = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (lambda[i] == 0) {
            first_zero = std::min(first_zero, i);
            last_zero = i;
        }
    if (first_zero < n) {
        std::size_t lo = first_zero, hi = last_zero;
        while (lo < hi)
            pd.pairs.push_back({lo++, hi--});
    }
    assign_k_values(lambda, pd);
    return pd;
}

/**
 * Moves each selected pair (a, -a) at (i_s, j_s) to (k_s, -k_s), unsorted.
 *
 * k_s is the new absolute value of the pair: it exceeds a and avoids
 * I_{s-1}, which holds every absolute value already in use, so the result
 * has no repeated nonzero entries. For zero pairs this is the same as
 * adding k_s (delta_{i_s} - delta_{j_s}).
 */
inline weight raise(const weight& lambda, const pairing_data& pd, const theta_vector& theta) {
    if (theta.size() != pd.p())
        throw domain_error("theta has length " + std::to_string(theta.size()) + ", expected " +
                           std::to_string(pd.p()));
    std::vector<int> c = lambda.coords();
    for (std::size_t s = 0; s < pd.p(); ++s) {
        if (!theta.bits[s])
            continue;
        c[pd.pairs[s].i] = pd.k[s];
        c[pd.pairs[s].j] = -pd.k[s];
    }
    return weight(std::move(c));
}

inline weight r_theta(const weight& lambda, const pairing_data& pd, const theta_vector& theta) {
    return sort_to_dominant(raise(lambda, pd, theta));
}

/// R_theta(lambda): the dominant conjugate of the raised weight.
inline weight r_theta(const weight& lambda, const theta_vector& theta) {
    return r_theta(lambda, pairing(lambda), theta);
}

/// Every R_theta(lambda), theta in Z_2^p, indexed by theta mask.
inline std::vector<weight> r_theta_images(const weight& lambda) {
    const auto pd = pairing(lambda);
    std::vector<weight> out;
    out.reserve(std::size_t{1} << pd.p());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pd.p()); ++mask)
        out.push_back(r_theta(lambda, pd, theta_vector::from_mask(pd.p(), mask)));
    return out;
}

/// One summand d_{mu,lambda} [L(lambda)] of [E(mu)].
struct decomposition_term {
    weight lambda;
    integer d;
    // number of theta with R_theta(lambda) = mu; diagnostic only
    std::size_t theta_count;
};

/**
 * The summands of [E(mu)] = sum d_{mu,lambda} [L(lambda)] among `candidates`:
 * every lambda with some R_theta(lambda) = mu, with
 * d_{mu,lambda} = 2^{(ell(mu) - ell(lambda)) / 2}.
 */
inline std::vector<decomposition_term> decompose_euler(const weight& mu, const std::vector<weight>& candidates) {
    require_dominant(mu, "decompose_euler");
    std::vector<decomposition_term> out;
    for (const auto& lambda : candidates) {
        require_dominant(lambda, "decompose_euler");
        if (lambda.rank() != mu.rank())
            throw rank_mismatch("decompose_euler: candidate rank mismatch");
        std::size_t hits = 0;
        for (const auto& img : r_theta_images(lambda))
            if (img == mu)
                ++hits;
        if (hits == 0)
            continue;
        std::size_t lm = ell(mu), ll = ell(lambda);
        if (ll > lm || (lm - ll) % 2 != 0)
            throw odd_length_gap("decompose_euler: ell gap between " + to_string(mu) + " and " + to_string(lambda));
        out.push_back({lambda, pow2((lm - ll) / 2), hits});
    }
    return out;
}

/// Candidates for the predecessors of mu under R_theta: raising never
/// shrinks |entries| and preserves the coordinate sum.
inline std::vector<weight> predecessor_candidates(const weight& mu) {
    return enumerate_dominant(mu.rank(), mu.sum(), mu.max_abs());
}

inline std::vector<decomposition_term> decompose_euler(const weight& mu) {
    return decompose_euler(mu, predecessor_candidates(mu));
}

/// nu together with everything reachable from it by repeatedly taking
/// R_theta-predecessors, in lexicographically descending order (a linear
/// extension of the dominance order, largest first).
inline std::vector<weight> block_closure(const weight& nu) {
    require_dominant(nu, "block_closure");
    const auto candidates = predecessor_candidates(nu);
    std::map<weight, std::vector<weight>> preds;
    for (const auto& lambda : candidates)
        for (const auto& img : r_theta_images(lambda))
            if (img != lambda)
                preds[img].push_back(lambda);

    std::set<weight> seen{nu};
    std::vector<weight> stack{nu};
    while (!stack.empty()) {
        weight cur = stack.back();
        stack.pop_back();
        for (const auto& lambda : preds[cur])
            if (seen.insert(lambda).second)
                stack.push_back(lambda);
    }
    return {seen.rbegin(), seen.rend()};
}

/**
 * Irreducible characters of finite-dimensional q(n)-modules by inverting
 * the unitriangular decomposition of Euler characteristics:
 * ch L(nu) = ch E(nu) - sum_{lambda != nu} d_{nu,lambda} ch L(lambda).
 *
 * Results are memoized per weight. Not thread-safe; use one per worker.
 */
class character_solver {
public:
    explicit character_solver(std::size_t rank) : rank_(rank) {}

    std::size_t rank() const noexcept { return rank_; }
    schur_cache& schur_table() noexcept { return schurs_; }

    const laurent_poly& schur_p_of(const weight& lambda) {
        check(lambda, "schur_p");
        auto it = schur_p_.find(lambda);
        if (it == schur_p_.end())
            it = schur_p_.emplace(lambda, schur_p(lambda)).first;
        return it->second;
    }

    /// ch E(lambda) = 2^ceil(ell/2) P_lambda.
    const laurent_poly& euler(const weight& lambda) {
        auto it = euler_.find(lambda);
        if (it == euler_.end())
            it = euler_.emplace(lambda, schur_p_of(lambda) * pow2(clifford_exponent(lambda))).first;
        return it->second;
    }

    const std::vector<decomposition_term>& decomposition(const weight& mu) {
        check(mu, "decompose_euler");
        auto it = decomp_.find(mu);
        if (it == decomp_.end())
            it = decomp_.emplace(mu, decompose_euler(mu)).first;
        return it->second;
    }

    const laurent_poly& irreducible(const weight& nu) {
        check(nu, "irreducible_character");
        if (auto it = irr_.find(nu); it != irr_.end())
            return it->second;
        laurent_poly ch = euler(nu);
        for (const auto& t : decomposition(nu)) {
            if (t.lambda == nu)
                continue;
            ch.add_scaled_shifted(irreducible(t.lambda), -t.d, exponents(rank_, 0));
        }
        for (const auto& [e, c] : ch.terms())
            if (c < 0)
                throw negative_coefficient("irreducible_character" + to_string(nu) + ": negative coefficient at " +
                                           to_string(weight(e)));
        return irr_.emplace(nu, std::move(ch)).first->second;
    }

    /// gl(n)-composition multiplicities of L(nu), both parities together.
    schur_expansion branching(const weight& nu) { return schur_expand(irreducible(nu), schurs_); }

    integer trivial_multiplicity(const weight& nu) {
        auto ex = branching(nu);
        auto it = ex.find(weight::zero(rank_));
        return it == ex.end() ? integer(0) : it->second;
    }

    /// sch L(nu): 1 for the trivial module, 0 otherwise. For nu != 0 the
    /// value rests on the trivial gl(n)-multiplicity vanishing, which is
    /// checked; a nonzero multiplicity raises theorem_violation.
    integer supercharacter_verdict(const weight& nu) {
        check(nu, "supercharacter_verdict");
        if (nu.is_zero())
            return 1;
        auto t = trivial_multiplicity(nu);
        if (t != 0)
            throw theorem_violation("trivial gl(n)-multiplicity " + t.str() + " in L" + to_string(nu));
        return 0;
    }

private:
    void check(const weight& w, const char* where) const {
        if (w.rank() != rank_)
            throw rank_mismatch(std::string(where) + ": weight of rank " + std::to_string(w.rank()) +
                                " given to a rank " + std::to_string(rank_) + " solver");
        require_dominant(w, where);
    }

    std::size_t rank_;
    schur_cache schurs_;
    std::map<weight, laurent_poly> schur_p_;
    std::map<weight, laurent_poly> euler_;
    std::map<weight, std::vector<decomposition_term>> decomp_;
    std::map<weight, laurent_poly> irr_;
};

inline laurent_poly irreducible_character(const weight& nu) {
    return character_solver(nu.rank()).irreducible(nu);
}

inline schur_expansion branching(const weight& nu) {
    return character_solver(nu.rank()).branching(nu);
}

inline integer trivial_multiplicity(const weight& nu) {
    return character_solver(nu.rank()).trivial_multiplicity(nu);
}

inline integer supercharacter_verdict(const weight& nu) {
    return character_solver(nu.rank()).supercharacter_verdict(nu);
}

inline bool has_distinct_coords(const weight& w) {
    std::set<int> s(w.begin(), w.end());
    return s.size() == w.rank();
}

/// g_{0,lambda}: coefficient of s_0 in P_lambda, for lambda with distinct
/// coordinates.
inline integer g0_coefficient_distinct(const weight& lambda) {
    require_dominant(lambda, "g0_coefficient_distinct");
    if (!has_distinct_coords(lambda))
        throw non_distinct("g0_coefficient_distinct: " + to_string(lambda) + " has repeated coordinates");
    auto ex = schur_expand(schur_p(lambda));
    auto it = ex.find(weight::zero(lambda.rank()));
    return it == ex.end() ? integer(0) : it->second;
}

} // namespace qsuper

#endif
