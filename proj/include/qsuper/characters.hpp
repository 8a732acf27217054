#ifndef QSUPER_CHARACTERS_HPP
#define QSUPER_CHARACTERS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent_poly.hpp"
#include "permutation.hpp"
#include "weights.hpp"

namespace qsuper {

/// Coefficients of a symmetric Laurent polynomial in the Schur basis,
/// keyed by generalized partition. Zero coefficients are never stored.
using schur_expansion = std::map<weight, integer>;

inline integer pow2(std::size_t k) {
    integer r = 1;
    r <<= k;
    return r;
}

/// dim I_lambda = 2^ceil(ell(lambda)/2).
inline std::size_t clifford_exponent(const weight& w) {
    return (ell(w) + 1) / 2;
}

inline laurent_poly monomial(const weight& w, integer coeff = 1) {
    return laurent_poly::monomial(w.rank(), w.coords(), std::move(coeff));
}

/// Sum over S_n of sgn(w) * w(x^e).
inline laurent_poly alternant(const exponents& e) {
    const std::size_t n = e.size();
    laurent_poly a(n);
    const auto base = laurent_poly::monomial(n, e);
    for_each_permutation(n, [&](const permutation& w) { a += apply_permutation(base, w) * integer(sign(w)); });
    return a;
}

/// prod_{i<j} (x_i - x_j), as the alternant of rho'.
inline laurent_poly vandermonde(std::size_t n) {
    return alternant(rho_prime(n).coords());
}

/// prod_{i<j} (x_i + x_j) = ch L0(rho) in integral-exponent form.
inline laurent_poly weyl_denominator_product(std::size_t n) {
    auto p = laurent_poly::constant(n, 1);
    for (const auto& r : positive_roots(n))
        p *= laurent_poly::variable(n, r.i) + laurent_poly::variable(n, r.j);
    return p;
}

/// Schur Laurent polynomial s_mu (= ch L0(mu)) as a bialternant quotient.
inline laurent_poly schur(const weight& mu) {
    if (!is_weakly_decreasing(mu))
        throw non_dominant("schur: " + to_string(mu) + " is not a generalized partition");
    const std::size_t n = mu.rank();
    return exact_divide(alternant((mu + rho_prime(n)).coords()), vandermonde(n));
}

/// Memo table for s_mu at a fixed rank. Not thread-safe; use one per worker.
class schur_cache {
public:
    const laurent_poly& get(const weight& mu) {
        auto it = table_.find(mu);
        if (it == table_.end())
            it = table_.emplace(mu, schur(mu)).first;
        return it->second;
    }

private:
    std::map<weight, laurent_poly> table_;
};

/// Expands a symmetric Laurent polynomial in Schur polynomials by peeling
/// off lexicographically leading terms.
inline schur_expansion schur_expand(laurent_poly f, schur_cache& cache) {
    if (!is_symmetric(f))
        throw not_symmetric("schur_expand: input is not symmetric");
    schur_expansion out;
    while (!f.is_zero()) {
        const auto [e, c] = f.leading();
        weight mu(e);
        if (!is_weakly_decreasing(mu))
            throw invariant_violation("schur_expand: leading exponent " + to_string(mu) + " is not a partition");
        out.emplace(mu, c);
        f.add_scaled_shifted(cache.get(mu), -c, exponents(f.rank(), 0));
    }
    return out;
}

inline schur_expansion schur_expand(const laurent_poly& f) {
    schur_cache cache;
    return schur_expand(f, cache);
}

/// Sum of coeff * s_mu over an expansion.
inline laurent_poly schur_sum(std::size_t n, const schur_expansion& ex, schur_cache& cache) {
    laurent_poly f(n);
    for (const auto& [mu, c] : ex)
        f.add_scaled_shifted(cache.get(mu), c, exponents(n, 0));
    return f;
}

/**
 * Schur P-Laurent polynomial P_lambda.
 *
 * Summed over all of S_n rather than coset representatives and divided by
 * |Stab(lambda)| = (number of zero coordinates)!. The denominators
 * w(x_i - x_j), lambda_i > lambda_j, are cleared against the full
 * Vandermonde: each is +-(x_a - x_b) for a distinct pair a < b, and the
 * unmatched Vandermonde factors multiply the summand.
 */
inline laurent_poly schur_p(const weight& lambda) {
    require_dominant(lambda, "schur_p");
    const std::size_t n = lambda.rank();

    std::vector<positive_root> strict_pairs;
    auto numerator = monomial(lambda);
    for (const auto& r : positive_roots(n)) {
        if (lambda[r.i] > lambda[r.j]) {
            strict_pairs.push_back(r);
            numerator *= laurent_poly::variable(n, r.i) + laurent_poly::variable(n, r.j);
        }
    }

    laurent_poly total(n);
    std::vector<std::vector<bool>> matched(n, std::vector<bool>(n));
    for_each_permutation(n, [&](const permutation& w) {
        for (auto& row : matched)
            std::fill(row.begin(), row.end(), false);
        int s = 1;
        for (const auto& r : strict_pairs) {
            std::size_t a = w[r.i], b = w[r.j];
            if (a > b) {
                std::swap(a, b);
                s = -s;
            }
            matched[a][b] = true;
        }
        auto term = apply_permutation(numerator, w);
        for (const auto& r : positive_roots(n))
            if (!matched[r.i][r.j])
                term *= laurent_poly::variable(n, r.i) - laurent_poly::variable(n, r.j);
        total.add_scaled_shifted(term, integer(s), exponents(n, 0));
    });

    std::size_t zeros = n - ell(lambda);
    return exact_scalar_divide(exact_divide(total, vandermonde(n)), integer(factorial(zeros)));
}

/// ch E(lambda) = 2^ceil(ell/2) P_lambda.
inline laurent_poly euler_char(const weight& lambda) {
    return schur_p(lambda) * pow2(clifford_exponent(lambda));
}

/**
 * [Delta(lambda) : L0(0)] as a gl(n)-module.
 *
 * ch Delta(lambda) = 2^ceil(ell/2) * sum_{I} ch Delta0(lambda - sum_I alpha),
 * and the dominant weight 0 heads only its own gl(n)-Verma module
 * ([Delta0(mu) : L0(0)] = delta_{mu,0}), so only subsets I with
 * sum_I alpha = lambda contribute.
 */
inline integer verma_trivial_multiplicity(const weight& lambda) {
    return pow2(clifford_exponent(lambda)) * integer(count_root_subsets(lambda));
}

/// sch Delta(lambda): 1 for lambda = 0, else 0 (I_lambda has equal even
/// and odd dimension once lambda != 0).
inline integer sch_verma(const weight& lambda) {
    return lambda.is_zero() ? 1 : 0;
}

} // namespace qsuper

#endif
