#ifndef QSUPER_WEIGHTS_HPP
#define QSUPER_WEIGHTS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace qsuper {

/// An integral weight sum_i c_i delta_i of q(n), stored by its coordinates
/// in the delta basis.
class weight {
public:
    weight() = default;
    explicit weight(std::vector<int> coords) : coords_(std::move(coords)) {}
    weight(std::initializer_list<int> coords) : coords_(coords) {}

    static weight zero(std::size_t n) { return weight(std::vector<int>(n, 0)); }

    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<int>& coords() const noexcept { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    int sum() const {
        int s = 0;
        for (int c : coords_)
            s += c;
        return s;
    }

    int abs_sum() const {
        int s = 0;
        for (int c : coords_)
            s += std::abs(c);
        return s;
    }

    int max_abs() const {
        int m = 0;
        for (int c : coords_)
            m = std::max(m, std::abs(c));
        return m;
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
    }

    friend auto operator<=>(const weight&, const weight&) = default;
    friend bool operator==(const weight&, const weight&) = default;

private:
    std::vector<int> coords_;
};

/// "(c1,c2,...,cn)"
inline std::string to_string(const weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

/// The positive root delta_i - delta_j, 0-based, i < j.
struct positive_root {
    std::size_t i;
    std::size_t j;

    friend bool operator==(const positive_root&, const positive_root&) = default;
};

inline std::vector<positive_root> positive_roots(std::size_t n) {
    std::vector<positive_root> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            roots.push_back({i, j});
    return roots;
}

/// Number of nonzero coordinates.
inline std::size_t ell(const weight& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int c) { return c != 0; }));
}

inline bool is_weakly_decreasing(const weight& w) {
    return std::is_sorted(w.begin(), w.end(), std::greater<>());
}

/// Weakly decreasing, with equal neighbours allowed only at the value 0:
/// the highest weights of finite-dimensional simple q(n)-modules.
inline bool is_dominant_integral(const weight& w) {
    for (std::size_t i = 0; i + 1 < w.rank(); ++i) {
        if (w[i] < w[i + 1])
            return false;
        if (w[i] == w[i + 1] && w[i] != 0)
            return false;
    }
    return true;
}

inline void require_dominant(const weight& w, const char* where) {
    if (!is_dominant_integral(w))
        throw non_dominant(std::string(where) + ": " + to_string(w) + " is not dominant integral");
}

/// 2*rho = (n-1, n-3, ..., 1-n).
inline weight two_rho(std::size_t n) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = static_cast<int>(n) - 2 * static_cast<int>(i) - 1;
    return weight(std::move(c));
}

/// The integral shift rho' = (n-1, n-2, ..., 0).
inline weight rho_prime(std::size_t n) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = static_cast<int>(n - 1 - i);
    return weight(std::move(c));
}

inline weight operator+(const weight& a, const weight& b) {
    if (a.rank() != b.rank())
        throw rank_mismatch("weight rank mismatch");
    std::vector<int> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] + b[i];
    return weight(std::move(c));
}

inline weight operator-(const weight& a, const weight& b) {
    if (a.rank() != b.rank())
        throw rank_mismatch("weight rank mismatch");
    std::vector<int> c(a.rank());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] - b[i];
    return weight(std::move(c));
}

/// True iff mu - lambda is a nonnegative integer combination of positive
/// roots (equal sums, every prefix sum of lambda at most that of mu).
inline bool dominance_leq(const weight& lambda, const weight& mu) {
    if (lambda.rank() != mu.rank())
        throw rank_mismatch("dominance_leq: rank mismatch");
    long pl = 0, pm = 0;
    for (std::size_t i = 0; i < lambda.rank(); ++i) {
        pl += lambda[i];
        pm += mu[i];
        if (pl > pm)
            return false;
    }
    return pl == pm;
}

inline weight sort_to_dominant(const weight& w) {
    std::vector<int> c = w.coords();
    std::sort(c.begin(), c.end(), std::greater<>());
    return weight(std::move(c));
}

inline weight apply_permutation(const weight& w, const permutation& p) {
    if (!is_permutation_of_rank(p, w.rank()))
        throw rank_mismatch("permutation does not act on this weight");
    std::vector<int> c(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i)
        c[p[i]] = w[i];
    return weight(std::move(c));
}

/// For every weight of the form sum_{alpha in I} alpha with I a subset of
/// the positive roots, the number of such subsets I.
inline std::map<weight, std::uint64_t> root_subset_sums(std::size_t n) {
    std::map<weight, std::uint64_t> table{{weight::zero(n), 1}};
    for (const auto& r : positive_roots(n)) {
        auto next = table;
        for (const auto& [w, count] : table) {
            std::vector<int> c = w.coords();
            ++c[r.i];
            --c[r.j];
            next[weight(std::move(c))] += count;
        }
        table = std::move(next);
    }
    return table;
}

/// #{ I subset of positive roots : sum_{alpha in I} alpha = lambda }.
inline std::uint64_t count_root_subsets(const weight& lambda) {
    auto table = root_subset_sums(lambda.rank());
    auto it = table.find(lambda);
    return it == table.end() ? 0 : it->second;
}

namespace detail {

inline void enumerate_dominant_rec(std::size_t n, int bound, std::vector<int>& prefix,
                                   const std::function<void(const weight&)>& emit) {
    if (prefix.size() == n) {
        emit(weight(prefix));
        return;
    }
    int hi = bound;
    if (!prefix.empty()) {
        int last = prefix.back();
        hi = last == 0 ? 0 : last - 1;
    }
    for (int v = hi; v >= -bound; --v) {
        prefix.push_back(v);
        enumerate_dominant_rec(n, bound, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace detail

/// Calls `f` on every dominant integral weight of rank n with
/// max |lambda_i| <= bound, in lexicographically descending order.
template <class F>
void for_each_dominant(std::size_t n, int bound, F&& f) {
    std::vector<int> prefix;
    prefix.reserve(n);
    std::function<void(const weight&)> emit = [&](const weight& w) { f(w); };
    detail::enumerate_dominant_rec(n, bound, prefix, emit);
}

/// All dominant integral weights with coordinate sum `total` and
/// max |lambda_i| <= bound, lexicographically descending.
inline std::vector<weight> enumerate_dominant(std::size_t n, int total, int bound) {
    std::vector<weight> out;
    for_each_dominant(n, bound, [&](const weight& w) {
        if (w.sum() == total)
            out.push_back(w);
    });
    return out;
}

/// Dominant integral weights with max |lambda_i| <= bound and
/// sum |lambda_i| <= abs_sum_bound: the sweep box.
inline std::vector<weight> dominant_sweep_box(std::size_t n, int bound, int abs_sum_bound) {
    std::vector<weight> out;
    for_each_dominant(n, bound, [&](const weight& w) {
        if (w.abs_sum() <= abs_sum_bound)
            out.push_back(w);
    });
    return out;
}

} // namespace qsuper

#endif
