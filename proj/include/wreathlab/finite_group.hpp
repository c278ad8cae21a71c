#ifndef WREATHLAB_FINITE_GROUP_HPP_
#define WREATHLAB_FINITE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wreathlab {

  /// Index of an element inside its FiniteGroup.  The identity is always 0.
  using Elem = std::uint32_t;

  inline constexpr Elem identity_elem = 0;

  /// Size limits shared by the constructors and the expensive searches.
  struct Limits {
    /// Largest group any constructor will build.
    std::size_t max_order = 100'000;
    /// Largest group whose automorphisms will be enumerated.
    std::size_t max_aut_order = 200;
    /// Groups up to this order get a materialized multiplication table;
    /// larger ones multiply through their construction rule.
    std::size_t table_threshold = 4096;
  };

  using MulRule = std::function<Elem(Elem, Elem)>;
  using InvRule = std::function<Elem(Elem)>;

  namespace detail {
    struct GroupData {
      std::string        label;
      Elem               order = 0;
      std::vector<Elem>  table;  // row-major, empty when `rule` is used
      MulRule            rule;
      std::vector<Elem>  inverse;
      std::vector<Elem>  generators;
      std::optional<int> symmetric_degree;
    };
  }  // namespace detail

  /// A finite group realized on the element indices 0, ..., order - 1.
  ///
  /// Instances are immutable and cheap to copy (shared storage), so they can
  /// be handed to concurrent workers freely.  Every constructor checks the
  /// group axioms before returning: the identity, inverse and Latin-square
  /// conditions in full when a table is stored, and associativity on every
  /// triple for orders up to 64 and on 10 000 seeded random triples above.
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::string       label,
                                  Elem              order,
                                  std::vector<Elem> table,
                                  std::vector<Elem> generators = {});

    /// Builds a group from a multiplication rule.  The rule is tabulated when
    /// `order <= limits.table_threshold`.  `inverse`, when given, must agree
    /// with the rule; otherwise inverses are found by powering.
    static FiniteGroup from_rule(std::string        label,
                                 Elem               order,
                                 MulRule            rule,
                                 InvRule            inverse,
                                 std::vector<Elem>  generators,
                                 Limits const&      limits,
                                 std::optional<int> symmetric_degree
                                 = std::nullopt);

    Elem order() const noexcept {
      return _data ? _data->order : 0;
    }

    Elem mul(Elem x, Elem y) const {
      auto const& d = *_data;
      if (!d.table.empty()) {
        return d.table[static_cast<std::size_t>(x) * d.order + y];
      }
      return d.rule(x, y);
    }

    Elem inv(Elem x) const {
      return _data->inverse[x];
    }

    /// g x g^-1
    Elem conj(Elem g, Elem x) const {
      return mul(mul(g, x), inv(g));
    }

    /// [x, y] = x y x^-1 y^-1
    Elem commutator(Elem x, Elem y) const {
      return mul(mul(x, y), mul(inv(x), inv(y)));
    }

    Elem pow(Elem x, std::uint64_t k) const {
      Elem result = identity_elem;
      Elem base   = x;
      while (k > 0) {
        if (k & 1U) {
          result = mul(result, base);
        }
        base = mul(base, base);
        k >>= 1U;
      }
      return result;
    }

    std::uint64_t element_order(Elem x) const {
      std::uint64_t k = 1;
      for (Elem y = x; y != identity_elem; y = mul(y, x)) {
        ++k;
      }
      return k;
    }

    bool commute(Elem x, Elem y) const {
      return mul(x, y) == mul(y, x);
    }

    std::string const& label() const noexcept {
      return _data->label;
    }

    /// A generating set (never empty for non-trivial groups).
    std::span<Elem const> generators() const noexcept {
      return _data->generators;
    }

    bool has_table() const noexcept {
      return !_data->table.empty();
    }

    /// Degree n when this group was built as symmetric(n).
    std::optional<int> symmetric_degree() const noexcept {
      return _data->symmetric_degree;
    }

    bool is_abelian() const {
      auto gens = generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          if (!commute(gens[i], gens[j])) {
            return false;
          }
        }
      }
      return true;
    }

    /// Same object, or same order with identical multiplication.
    bool same_as(FiniteGroup const& other) const;

    bool valid() const noexcept {
      return static_cast<bool>(_data);
    }

   private:
    explicit FiniteGroup(std::shared_ptr<detail::GroupData const> d)
        : _data(std::move(d)) {}

    std::shared_ptr<detail::GroupData const> _data;
  };

  ////////////////////////////////////////////////////////////////////////
  // Implementation
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline Elem mul_of(GroupData const& d, Elem x, Elem y) {
      if (!d.table.empty()) {
        return d.table[static_cast<std::size_t>(x) * d.order + y];
      }
      return d.rule(x, y);
    }

    inline void check_axioms(GroupData const& d) {
      Elem const n = d.order;
      for (Elem x = 0; x < n; ++x) {
        if (mul_of(d, identity_elem, x) != x
            || mul_of(d, x, identity_elem) != x) {
          throw InvalidGroup(d.label + ": element 0 is not the identity");
        }
        if (mul_of(d, x, d.inverse[x]) != identity_elem
            || mul_of(d, d.inverse[x], x) != identity_elem) {
          throw InvalidGroup(d.label + ": bad inverse for element "
                             + std::to_string(x));
        }
      }
      if (!d.table.empty()) {
        std::vector<Elem> seen_row(n, 0), seen_col(n, 0);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            Elem r = d.table[static_cast<std::size_t>(x) * n + y];
            Elem c = d.table[static_cast<std::size_t>(y) * n + x];
            if (r >= n || c >= n || seen_row[r] == x + 1
                || seen_col[c] == x + 1) {
              throw InvalidGroup(d.label + ": table is not a Latin square");
            }
            seen_row[r] = x + 1;
            seen_col[c] = x + 1;
          }
        }
      }
      auto assoc = [&](Elem x, Elem y, Elem z) {
        if (mul_of(d, mul_of(d, x, y), z) != mul_of(d, x, mul_of(d, y, z))) {
          throw InvalidGroup(d.label + ": multiplication is not associative");
        }
      };
      if (n <= 64) {
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
              assoc(x, y, z);
            }
          }
        }
      } else {
        std::mt19937_64                     rng(0x5eed2026ULL);
        std::uniform_int_distribution<Elem> pick(0, n - 1);
        for (int i = 0; i < 10'000; ++i) {
          Elem x = pick(rng), y = pick(rng), z = pick(rng);
          assoc(x, y, z);
        }
      }
    }

    // Greedy scan: keep every element that is not yet in the closure of the
    // elements kept so far.
    inline std::vector<Elem> scan_generators(GroupData const& d) {
      std::vector<Elem> gens;
      std::vector<char> in(d.order, 0);
      std::vector<Elem> members{identity_elem};
      in[identity_elem] = 1;
      for (Elem x = 1; x < d.order && members.size() < d.order; ++x) {
        if (in[x]) {
          continue;
        }
        gens.push_back(x);
        std::size_t const old = members.size();
        for (std::size_t i = 0; i < old; ++i) {
          Elem y = mul_of(d, members[i], x);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
        for (std::size_t i = old; i < members.size(); ++i) {
          for (Elem g : gens) {
            Elem y = mul_of(d, members[i], g);
            if (!in[y]) {
              in[y] = 1;
              members.push_back(y);
            }
          }
        }
      }
      return gens;
    }

    inline void finish(GroupData& d, std::vector<Elem> generators) {
      std::vector<Elem> gens;
      std::vector<char> used(d.order, 0);
      for (Elem g : generators) {
        if (g >= d.order) {
          throw InvalidGroup(d.label + ": generator index out of range");
        }
        if (g != identity_elem && !used[g]) {
          used[g] = 1;
          gens.push_back(g);
        }
      }
      d.generators = std::move(gens);
      check_axioms(d);
      if (d.order > 1 && d.generators.empty()) {
        d.generators = scan_generators(d);
      }
    }

  }  // namespace detail

  inline FiniteGroup FiniteGroup::from_table(std::string       label,
                                             Elem              order,
                                             std::vector<Elem> table,
                                             std::vector<Elem> generators) {
    if (order == 0) {
      throw InvalidGroup(label + ": order must be positive");
    }
    if (table.size() != static_cast<std::size_t>(order) * order) {
      throw InvalidGroup(label + ": table size does not match order");
    }
    for (Elem v : table) {
      if (v >= order) {
        throw InvalidGroup(label + ": table entry out of range");
      }
    }
    // Relabel so that the identity sits at index 0.
    Elem e = order;
    for (Elem x = 0; x < order && e == order; ++x) {
      bool is_id = true;
      for (Elem y = 0; y < order && is_id; ++y) {
        is_id = table[static_cast<std::size_t>(x) * order + y] == y
                && table[static_cast<std::size_t>(y) * order + x] == y;
      }
      if (is_id) {
        e = x;
      }
    }
    if (e == order) {
      throw InvalidGroup(label + ": no identity element");
    }
    if (e != identity_elem) {
      auto swap_label = [&](Elem v) {
        return v == e ? identity_elem : (v == identity_elem ? e : v);
      };
      std::vector<Elem> relabeled(table.size());
      for (Elem x = 0; x < order; ++x) {
        for (Elem y = 0; y < order; ++y) {
          relabeled[static_cast<std::size_t>(swap_label(x)) * order
                    + swap_label(y)]
              = swap_label(table[static_cast<std::size_t>(x) * order + y]);
        }
      }
      table = std::move(relabeled);
      for (Elem& g : generators) {
        if (g < order) {
          g = swap_label(g);
        }
      }
    }
    auto d   = std::make_shared<detail::GroupData>();
    d->label = std::move(label);
    d->order = order;
    d->table = std::move(table);
    d->inverse.assign(order, order);
    for (Elem x = 0; x < order; ++x) {
      for (Elem y = 0; y < order; ++y) {
        if (d->table[static_cast<std::size_t>(x) * order + y] == identity_elem) {
          d->inverse[x] = y;
          break;
        }
      }
      if (d->inverse[x] == order) {
        throw InvalidGroup(d->label + ": element without inverse");
      }
    }
    detail::finish(*d, std::move(generators));
    return FiniteGroup(std::move(d));
  }

  inline FiniteGroup FiniteGroup::from_rule(std::string        label,
                                            Elem               order,
                                            MulRule            rule,
                                            InvRule            inverse,
                                            std::vector<Elem>  generators,
                                            Limits const&      limits,
                                            std::optional<int> symmetric_degree) {
    if (order == 0) {
      throw InvalidGroup(label + ": order must be positive");
    }
    if (order > limits.max_order) {
      throw OrderOverflow(label + ": order " + std::to_string(order)
                          + " exceeds the configured maximum "
                          + std::to_string(limits.max_order));
    }
    auto d              = std::make_shared<detail::GroupData>();
    d->label            = std::move(label);
    d->order            = order;
    d->symmetric_degree = symmetric_degree;
    if (order <= limits.table_threshold) {
      d->table.resize(static_cast<std::size_t>(order) * order);
      for (Elem x = 0; x < order; ++x) {
        for (Elem y = 0; y < order; ++y) {
          d->table[static_cast<std::size_t>(x) * order + y] = rule(x, y);
        }
      }
    } else {
      d->rule = std::move(rule);
    }
    d->inverse.resize(order);
    for (Elem x = 0; x < order; ++x) {
      if (inverse) {
        d->inverse[x] = inverse(x);
      } else {
        // x^-1 = x^(k-1) where k is the order of x
        Elem prev = identity_elem;
        Elem cur  = x;
        for (Elem steps = 0; cur != identity_elem; ++steps) {
          if (steps > order) {
            throw InvalidGroup(d->label + ": element of infinite order");
          }
          prev = cur;
          cur  = detail::mul_of(*d, cur, x);
        }
        d->inverse[x] = x == identity_elem ? identity_elem : prev;
      }
    }
    detail::finish(*d, std::move(generators));
    return FiniteGroup(std::move(d));
  }

  inline bool FiniteGroup::same_as(FiniteGroup const& other) const {
    if (_data == other._data) {
      return true;
    }
    if (!_data || !other._data || order() != other.order()) {
      return false;
    }
    Elem const n = order();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (mul(x, y) != other.mul(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_FINITE_GROUP_HPP_
