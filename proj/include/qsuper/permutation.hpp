#ifndef QSUPER_PERMUTATION_HPP
#define QSUPER_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace qsuper {

/// A permutation of {0, ..., n-1} in one-line notation: `w[i]` is the
/// image of `i`.
using permutation = std::vector<int>;

inline permutation identity_permutation(std::size_t n) {
    permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline bool is_permutation_of_rank(const permutation& w, std::size_t n) {
    if (w.size() != n)
        return false;
    std::vector<bool> seen(n, false);
    for (int v : w) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

inline permutation inverse(const permutation& w) {
    permutation inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        inv[w[i]] = static_cast<int>(i);
    return inv;
}

/// +1 for even permutations, -1 for odd ones (inversion count parity).
inline int sign(const permutation& w) {
    int s = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                s = -s;
    return s;
}

inline permutation adjacent_transposition(std::size_t n, std::size_t i) {
    auto w = identity_permutation(n);
    std::swap(w[i], w[i + 1]);
    return w;
}

/// Calls `f(w)` for every permutation of rank n, in lexicographic order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
    auto w = identity_permutation(n);
    do {
        f(static_cast<const permutation&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline std::size_t factorial(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t k = 2; k <= n; ++k)
        r *= k;
    return r;
}

} // namespace qsuper

#endif
