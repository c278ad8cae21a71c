#ifndef WREATHLAB_PERMUTATION_HPP_
#define WREATHLAB_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

// Permutations of {0, ..., n-1} in one-line notation: p[i] is the image of i.
//
// Products follow the right-action convention: (p * q)(i) = q(p(i)), i.e. p
// is applied first.  This is the convention under which the coordinate action
// (g.k)_i = k_{sigma(g)(i)} is an action, so every wreath construction in the
// library depends on it.

namespace wreathlab::perm {

  using Permutation = std::vector<int>;

  inline Permutation identity(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  inline bool is_identity(Permutation const& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_valid(Permutation const& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) {
        return false;
      }
      seen[x] = 1;
    }
    return true;
  }

  /// Right-action product: apply p, then q.
  inline Permutation product(Permutation const& p, Permutation const& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  /// Functional composition f o g: apply g, then f.
  inline Permutation compose(Permutation const& f, Permutation const& g) {
    return product(g, f);
  }

  inline Permutation inverse(Permutation const& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[p[i]] = static_cast<int>(i);
    }
    return r;
  }

  inline Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p[a], p[b]);
    return p;
  }

  inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
      r *= static_cast<std::uint64_t>(i);
    }
    return r;
  }

  /// Position of p in the lexicographic list of all permutations of its size.
  inline std::uint64_t rank(Permutation const& p) {
    int const    n = static_cast<int>(p.size());
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j) {
        smaller += p[j] < p[i];
      }
      r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return r;
  }

  inline Permutation unrank(std::uint64_t r, int n) {
    std::vector<int> pool = identity(n);
    Permutation      p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      std::uint64_t f = factorial(i);
      std::size_t   k = static_cast<std::size_t>(r / f);
      r %= f;
      p.push_back(pool[k]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return p;
  }

  /// True iff the listed permutations generate a transitive group on {0..n-1}.
  inline bool generates_transitive(std::vector<Permutation> const& gens, int n) {
    if (n <= 1) {
      return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int>  stack{0};
    seen[0]         = 1;
    int reached     = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto const& g : gens) {
        int y = g[x];
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n;
  }

}  // namespace wreathlab::perm

#endif  // WREATHLAB_PERMUTATION_HPP_
