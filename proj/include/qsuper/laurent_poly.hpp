#ifndef QSUPER_LAURENT_POLY_HPP
#define QSUPER_LAURENT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "permutation.hpp"

namespace qsuper {

/// Arbitrary-precision integer used for every coefficient in the library.
using integer = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}; entries may be
/// negative.
using exponents = std::vector<int>;

/**
 * Sparse multivariate Laurent polynomial in x_1, ..., x_n.
 *
 * Terms are kept in an ordered map keyed by exponent vector, so the
 * lexicographically greatest term is always at `rbegin()`. No stored
 * coefficient is ever zero, and every key has length `rank()`.
 *
 * @tparam Coeff exact ring of coefficients; it must support `%` and `/`
 *         for `exact_divide`.
 */
template <class Coeff>
class basic_laurent_poly {
public:
    using coeff_type = Coeff;
    using term_map = std::map<exponents, Coeff>;
    using term = typename term_map::value_type;

    explicit basic_laurent_poly(std::size_t rank = 0) : rank_(rank) {}

    static basic_laurent_poly monomial(std::size_t rank, exponents exps, Coeff coeff = Coeff(1)) {
        basic_laurent_poly p(rank);
        p.add_term(std::move(exps), std::move(coeff));
        return p;
    }

    static basic_laurent_poly constant(std::size_t rank, Coeff c) {
        return monomial(rank, exponents(rank, 0), std::move(c));
    }

    /// The variable x_{i+1} (0-based index i).
    static basic_laurent_poly variable(std::size_t rank, std::size_t i) {
        exponents e(rank, 0);
        e.at(i) = 1;
        return monomial(rank, std::move(e));
    }

    std::size_t rank() const noexcept { return rank_; }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Lexicographically greatest term. Precondition: not zero.
    const term& leading() const { return *terms_.rbegin(); }

    Coeff coefficient(const exponents& e) const {
        check_length(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds `c * x^e` in place, dropping the entry if it cancels.
    void add_term(exponents e, Coeff c) {
        check_length(e);
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    basic_laurent_poly& operator+=(const basic_laurent_poly& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    basic_laurent_poly& operator-=(const basic_laurent_poly& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    /// Adds `c * x^shift * o` in place.
    void add_scaled_shifted(const basic_laurent_poly& o, const Coeff& c, const exponents& shift) {
        check_rank(o);
        check_length(shift);
        if (c == 0)
            return;
        exponents e(rank_);
        for (const auto& [oe, oc] : o.terms_) {
            for (std::size_t i = 0; i < rank_; ++i)
                e[i] = oe[i] + shift[i];
            add_term(e, c * oc);
        }
    }

    friend basic_laurent_poly operator+(basic_laurent_poly a, const basic_laurent_poly& b) {
        a += b;
        return a;
    }

    friend basic_laurent_poly operator-(basic_laurent_poly a, const basic_laurent_poly& b) {
        a -= b;
        return a;
    }

    friend basic_laurent_poly operator-(const basic_laurent_poly& a) {
        basic_laurent_poly r(a.rank_);
        for (const auto& [e, c] : a.terms_)
            r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend basic_laurent_poly operator*(const basic_laurent_poly& a, const basic_laurent_poly& b) {
        a.check_rank(b);
        basic_laurent_poly r(a.rank_);
        for (const auto& [e, c] : b.terms_)
            r.add_scaled_shifted(a, c, e);
        return r;
    }

    basic_laurent_poly& operator*=(const basic_laurent_poly& o) { return *this = *this * o; }

    friend basic_laurent_poly operator*(basic_laurent_poly a, const Coeff& c) {
        if (c == 0)
            return basic_laurent_poly(a.rank_);
        for (auto& [e, v] : a.terms_)
            v *= c;
        return a;
    }

    friend basic_laurent_poly operator*(const Coeff& c, basic_laurent_poly a) { return std::move(a) * c; }

    friend bool operator==(const basic_laurent_poly& a, const basic_laurent_poly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    void check_length(const exponents& e) const {
        if (e.size() != rank_)
            throw rank_mismatch("exponent vector of length " + std::to_string(e.size()) +
                                " in a rank " + std::to_string(rank_) + " polynomial");
    }

    void check_rank(const basic_laurent_poly& o) const {
        if (o.rank_ != rank_)
            throw rank_mismatch("rank " + std::to_string(rank_) + " vs rank " + std::to_string(o.rank_));
    }

    std::size_t rank_;
    term_map terms_;
};

using laurent_poly = basic_laurent_poly<integer>;

template <class Coeff>
basic_laurent_poly<Coeff> add(const basic_laurent_poly<Coeff>& a, const basic_laurent_poly<Coeff>& b) {
    return a + b;
}

template <class Coeff>
basic_laurent_poly<Coeff> mul(const basic_laurent_poly<Coeff>& a, const basic_laurent_poly<Coeff>& b) {
    return a * b;
}

template <class Coeff>
basic_laurent_poly<Coeff> scale(const basic_laurent_poly<Coeff>& a, const Coeff& c) {
    return a * c;
}

/// Multiplies by the monomial x^shift.
template <class Coeff>
basic_laurent_poly<Coeff> shift(const basic_laurent_poly<Coeff>& a, const exponents& by) {
    basic_laurent_poly<Coeff> r(a.rank());
    r.add_scaled_shifted(a, Coeff(1), by);
    return r;
}

/// Substitutes x_i -> x_{w(i)}: the exponent vector e becomes e o w^{-1}.
template <class Coeff>
basic_laurent_poly<Coeff> apply_permutation(const basic_laurent_poly<Coeff>& a, const permutation& w) {
    const std::size_t n = a.rank();
    if (!is_permutation_of_rank(w, n))
        throw rank_mismatch("permutation does not act on rank " + std::to_string(n));
    basic_laurent_poly<Coeff> r(n);
    exponents e(n);
    for (const auto& [ae, c] : a.terms()) {
        for (std::size_t i = 0; i < n; ++i)
            e[w[i]] = ae[i];
        r.add_term(e, c);
    }
    return r;
}

template <class Coeff>
bool is_symmetric(const basic_laurent_poly<Coeff>& a) {
    for (std::size_t i = 0; i + 1 < a.rank(); ++i)
        if (!(apply_permutation(a, adjacent_transposition(a.rank(), i)) == a))
            return false;
    return true;
}

/// Coordinatewise minimum of the exponents occurring in `a` (zeros if `a` is 0).
template <class Coeff>
exponents min_exponents(const basic_laurent_poly<Coeff>& a) {
    if (a.is_zero())
        return exponents(a.rank(), 0);
    exponents m = a.terms().begin()->first;
    for (const auto& [e, c] : a.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

/**
 * Exact quotient num / den.
 *
 * Both operands are shifted by monomials into ordinary polynomial range
 * (every variable has minimal exponent 0), then reduced by leading terms
 * in lexicographic order. Since the shifted denominator is divisible by no
 * variable, a Laurent quotient exists iff the shifted quotient is a
 * polynomial, so the reduction is complete.
 *
 * Throws non_exact_division as soon as a leading term cannot be cancelled.
 */
template <class Coeff>
basic_laurent_poly<Coeff> exact_divide(const basic_laurent_poly<Coeff>& num, const basic_laurent_poly<Coeff>& den) {
    if (num.rank() != den.rank())
        throw rank_mismatch("exact_divide: rank mismatch");
    if (den.is_zero())
        throw domain_error("exact_divide: division by the zero polynomial");
    const std::size_t n = num.rank();
    if (num.is_zero())
        return basic_laurent_poly<Coeff>(n);

    exponents num_min = min_exponents(num);
    exponents den_min = min_exponents(den);
    exponents neg_num(n), neg_den(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_num[i] = -num_min[i];
        neg_den[i] = -den_min[i];
    }
    auto rem = shift(num, neg_num);
    const auto d = shift(den, neg_den);
    const auto& [lead_e, lead_c] = d.leading();

    basic_laurent_poly<Coeff> quot(n);
    exponents diff(n);
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        for (std::size_t i = 0; i < n; ++i) {
            diff[i] = re[i] - lead_e[i];
            if (diff[i] < 0)
                throw non_exact_division("exact_divide: leading monomial not divisible");
        }
        if (rc % lead_c != 0)
            throw non_exact_division("exact_divide: leading coefficient not divisible");
        Coeff q = rc / lead_c;
        quot.add_term(diff, q);
        rem.add_scaled_shifted(d, -q, diff);
    }

    exponents back(n);
    for (std::size_t i = 0; i < n; ++i)
        back[i] = num_min[i] - den_min[i];
    return shift(quot, back);
}

/// Divides every coefficient by `d`, failing unless all divisions are exact.
template <class Coeff>
basic_laurent_poly<Coeff> exact_scalar_divide(const basic_laurent_poly<Coeff>& a, const Coeff& d) {
    if (d == 0)
        throw domain_error("exact_scalar_divide: division by zero");
    basic_laurent_poly<Coeff> r(a.rank());
    for (const auto& [e, c] : a.terms()) {
        if (c % d != 0)
            throw non_exact_division("exact_scalar_divide: coefficient not divisible");
        r.add_term(e, c / d);
    }
    return r;
}

template <class Coeff>
Coeff coefficient(const basic_laurent_poly<Coeff>& a, const exponents& e) {
    return a.coefficient(e);
}

template <class Coeff>
std::string to_decimal(const Coeff& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

/// Human-readable form, terms in lexicographically descending order,
/// e.g. "2*x1*x2^-1 + 2 + 2*x1^-1*x2".
template <class Coeff>
std::string to_string(const basic_laurent_poly<Coeff>& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += to_decimal(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_decimal(mag) + "*" + mono;
    }
    return out;
}

} // namespace qsuper

#endif
