#ifndef WREATHLAB_BUILDERS_HPP_
#define WREATHLAB_BUILDERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "finite_group.hpp"
#include "permutation.hpp"

namespace wreathlab {

  namespace detail {
    inline std::uint64_t checked_order_product(std::uint64_t a,
                                               std::uint64_t b,
                                               Limits const& limits,
                                               std::string const& label) {
      std::uint64_t r = 0;
      if (__builtin_mul_overflow(a, b, &r) || r > limits.max_order) {
        throw OrderOverflow(label + ": order exceeds the configured maximum "
                            + std::to_string(limits.max_order));
      }
      return r;
    }

    inline bool needs_parens(std::string const& label) {
      return label.find_first_of("*^") != std::string::npos;
    }
  }  // namespace detail

  /// Cyclic group of order m; element i is the residue i.
  inline FiniteGroup cyclic(Elem m, Limits const& limits = {}) {
    if (m < 1) {
      throw InvalidArgument("cyclic: order must be at least 1");
    }
    std::string label = "C" + std::to_string(m);
    detail::checked_order_product(m, 1, limits, label);
    std::vector<Elem> gens;
    if (m > 1) {
      gens.push_back(1);
    }
    return FiniteGroup::from_rule(
        label,
        m,
        [m](Elem x, Elem y) { return static_cast<Elem>((x + y) % m); },
        [m](Elem x) { return static_cast<Elem>((m - x) % m); },
        std::move(gens),
        limits);
  }

  inline FiniteGroup trivial_group() {
    return cyclic(1);
  }

  /// Symmetric group on {0, ..., n-1}.  Element i is the i-th permutation in
  /// lexicographic one-line order (so the identity is element 0), and
  /// products apply the left factor first (see permutation.hpp).
  inline FiniteGroup symmetric(int n, Limits const& limits = {}) {
    if (n < 1) {
      throw InvalidArgument("symmetric: degree must be at least 1");
    }
    std::string label = "S" + std::to_string(n);
    if (n > 20 || perm::factorial(n) > limits.max_order) {
      throw OrderOverflow(label + ": order exceeds the configured maximum "
                          + std::to_string(limits.max_order));
    }
    Elem const order = static_cast<Elem>(perm::factorial(n));
    auto       perms = std::make_shared<std::vector<perm::Permutation>>();
    perms->reserve(order);
    for (Elem i = 0; i < order; ++i) {
      perms->push_back(perm::unrank(i, n));
    }
    std::vector<Elem> gens;
    if (n >= 2) {
      gens.push_back(static_cast<Elem>(perm::rank(perm::transposition(n, 0, 1))));
      perm::Permutation cycle(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        cycle[i] = (i + 1) % n;
      }
      gens.push_back(static_cast<Elem>(perm::rank(cycle)));
    }
    return FiniteGroup::from_rule(
        label,
        order,
        [perms](Elem x, Elem y) {
          return static_cast<Elem>(
              perm::rank(perm::product((*perms)[x], (*perms)[y])));
        },
        [perms](Elem x) {
          return static_cast<Elem>(perm::rank(perm::inverse((*perms)[x])));
        },
        std::move(gens),
        limits,
        n);
  }

  /// One-line permutation of element x of a group built by symmetric(n).
  inline perm::Permutation permutation_of(FiniteGroup const& sn, Elem x) {
    auto n = sn.symmetric_degree();
    if (!n) {
      throw InvalidArgument(sn.label() + " was not built as a symmetric group");
    }
    return perm::unrank(x, *n);
  }

  inline Elem element_of(FiniteGroup const& sn, perm::Permutation const& p) {
    auto n = sn.symmetric_degree();
    if (!n || static_cast<int>(p.size()) != *n || !perm::is_valid(p)) {
      throw InvalidArgument("element_of: permutation does not belong to "
                            + sn.label());
    }
    return static_cast<Elem>(perm::rank(p));
  }

  /// Mixed-radix codec for direct products: the leftmost factor is the most
  /// significant digit.
  class ProductCodec {
   public:
    ProductCodec() = default;
    explicit ProductCodec(std::vector<Elem> radices)
        : _radices(std::move(radices)) {}

    std::vector<Elem> decode(Elem x) const {
      std::vector<Elem> c(_radices.size());
      for (std::size_t i = _radices.size(); i-- > 0;) {
        c[i] = x % _radices[i];
        x /= _radices[i];
      }
      return c;
    }

    Elem encode(std::vector<Elem> const& c) const {
      Elem x = 0;
      for (std::size_t i = 0; i < _radices.size(); ++i) {
        x = x * _radices[i] + c[i];
      }
      return x;
    }

    std::vector<Elem> const& radices() const noexcept {
      return _radices;
    }

   private:
    std::vector<Elem> _radices;
  };

  inline FiniteGroup direct_product(std::vector<FiniteGroup> const& factors,
                                    Limits const&                   limits = {}) {
    if (factors.empty()) {
      return trivial_group();
    }
    std::string   label;
    std::uint64_t order = 1;
    std::vector<Elem> radices;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto const& f = factors[i];
      label += (i == 0 ? "" : "*")
               + (detail::needs_parens(f.label()) ? "(" + f.label() + ")"
                                                  : f.label());
      radices.push_back(f.order());
    }
    for (auto const& f : factors) {
      order = detail::checked_order_product(order, f.order(), limits, label);
    }
    ProductCodec      codec(radices);
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (Elem s : factors[i].generators()) {
        std::vector<Elem> c(factors.size(), identity_elem);
        c[i] = s;
        gens.push_back(codec.encode(c));
      }
    }
    return FiniteGroup::from_rule(
        label,
        static_cast<Elem>(order),
        [factors, codec](Elem x, Elem y) {
          auto a = codec.decode(x);
          auto b = codec.decode(y);
          for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = factors[i].mul(a[i], b[i]);
          }
          return codec.encode(a);
        },
        [factors, codec](Elem x) {
          auto a = codec.decode(x);
          for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = factors[i].inv(a[i]);
          }
          return codec.encode(a);
        },
        std::move(gens),
        limits);
  }

  inline FiniteGroup direct_product(FiniteGroup const& a,
                                    FiniteGroup const& b,
                                    Limits const&      limits = {}) {
    return direct_product(std::vector<FiniteGroup>{a, b}, limits);
  }

  /// H^k, indexed like direct_product of k copies of H.
  inline FiniteGroup direct_power(FiniteGroup const& h,
                                  int                k,
                                  Limits const&      limits = {}) {
    if (k < 0) {
      throw InvalidArgument("direct_power: exponent must be non-negative");
    }
    if (k == 0) {
      return trivial_group();
    }
    if (k == 1) {
      return h;
    }
    std::string   label = (detail::needs_parens(h.label()) ? "(" + h.label() + ")"
                                                           : h.label())
                        + "^" + std::to_string(k);
    std::uint64_t order = 1;
    for (int i = 0; i < k; ++i) {
      order = detail::checked_order_product(order, h.order(), limits, label);
    }
    ProductCodec             codec(std::vector<Elem>(k, h.order()));
    std::vector<Elem>        gens;
    for (int i = 0; i < k; ++i) {
      for (Elem s : h.generators()) {
        std::vector<Elem> c(k, identity_elem);
        c[i] = s;
        gens.push_back(codec.encode(c));
      }
    }
    return FiniteGroup::from_rule(
        label,
        static_cast<Elem>(order),
        [h, codec](Elem x, Elem y) {
          auto a = codec.decode(x);
          auto b = codec.decode(y);
          for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = h.mul(a[i], b[i]);
          }
          return codec.encode(a);
        },
        [h, codec](Elem x) {
          auto a = codec.decode(x);
          for (auto& v : a) {
            v = h.inv(v);
          }
          return codec.encode(a);
        },
        std::move(gens),
        limits);
  }

}  // namespace wreathlab

#endif  // WREATHLAB_BUILDERS_HPP_
