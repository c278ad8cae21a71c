#ifndef WREATHLAB_QUOTIENT_HPP_
#define WREATHLAB_QUOTIENT_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "builders.hpp"
#include "finite_group.hpp"
#include "hom.hpp"
#include "subgroup.hpp"

namespace wreathlab {

  using BigInt = boost::multiprecision::cpp_int;

  /// Invariant-factor description Z^free_rank + Z/d1 + ... + Z/dk with
  /// d1 | d2 | ... | dk and every di > 1.
  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;

    std::string to_string() const {
      std::string s;
      for (std::size_t i = 0; i < free_rank; ++i) {
        s += s.empty() ? "Z" : " + Z";
      }
      for (auto const& d : torsion) {
        s += (s.empty() ? "Z/" : " + Z/") + d.str();
      }
      return s.empty() ? "0" : s;
    }
  };

  /// Builds invariants from a list of cyclic orders, any order: splits each
  /// into prime powers and regroups them into an invariant-factor chain.
  inline AbelianInvariants invariants_from_cyclic_orders(
      std::size_t free_rank, std::vector<BigInt> const& orders) {
    // prime -> exponents
    std::vector<std::pair<BigInt, std::vector<unsigned>>> primary;
    for (BigInt d : orders) {
      if (d < 0) {
        d = -d;
      }
      if (d == 0) {
        ++free_rank;
        continue;
      }
      for (BigInt p = 2; p * p <= d; ++p) {
        unsigned e = 0;
        while (d % p == 0) {
          d /= p;
          ++e;
        }
        if (e > 0) {
          auto it = std::find_if(primary.begin(), primary.end(),
                                 [&](auto const& q) { return q.first == p; });
          if (it == primary.end()) {
            primary.push_back({p, {e}});
          } else {
            it->second.push_back(e);
          }
        }
      }
      if (d > 1) {
        auto it = std::find_if(primary.begin(), primary.end(),
                               [&](auto const& q) { return q.first == d; });
        if (it == primary.end()) {
          primary.push_back({d, {1}});
        } else {
          it->second.push_back(1);
        }
      }
    }
    std::size_t len = 0;
    for (auto& [p, es] : primary) {
      std::sort(es.begin(), es.end(), std::greater<>());
      len = std::max(len, es.size());
    }
    // Largest invariant factor collects the largest power of every prime.
    std::vector<BigInt> factors(len, BigInt(1));
    for (auto const& [p, es] : primary) {
      for (std::size_t i = 0; i < es.size(); ++i) {
        factors[i] *= boost::multiprecision::pow(p, es[i]);
      }
    }
    std::reverse(factors.begin(), factors.end());
    return {free_rank, factors};
  }

  struct Quotient {
    FiniteGroup group;
    /// Canonical projection onto `group`.
    GroupHom projection;
    /// representatives[i] is the least member of coset i.
    std::vector<Elem> representatives;
  };

  /// G/N on cosets labelled by their least member, in increasing order of
  /// that member (so the coset N itself is the identity 0).
  inline Quotient quotient(FiniteGroup const& g,
                           Subgroup const&    n,
                           Limits const&      limits = {}) {
    if (!is_normal(g, n)) {
      throw NotNormal("quotient: subgroup of order " + std::to_string(n.size())
                      + " is not normal in " + g.label());
    }
    Elem const        unset = g.order();
    std::vector<Elem> coset_of(g.order(), unset);
    std::vector<Elem> reps;
    for (Elem x = 0; x < g.order(); ++x) {
      if (coset_of[x] != unset) {
        continue;
      }
      Elem const id = static_cast<Elem>(reps.size());
      reps.push_back(x);
      for (Elem m : n.members()) {
        coset_of[g.mul(x, m)] = id;
      }
    }
    std::vector<Elem> gens;
    for (Elem s : g.generators()) {
      gens.push_back(coset_of[s]);
    }
    std::string label = g.label() + "/N" + std::to_string(n.size());
    auto        shared_cosets = std::make_shared<std::vector<Elem>>(coset_of);
    auto        shared_reps   = std::make_shared<std::vector<Elem>>(reps);
    FiniteGroup q             = FiniteGroup::from_rule(
        label,
        static_cast<Elem>(reps.size()),
        [g, shared_cosets, shared_reps](Elem a, Elem b) {
          return (*shared_cosets)[g.mul((*shared_reps)[a], (*shared_reps)[b])];
        },
        [g, shared_cosets, shared_reps](Elem a) {
          return (*shared_cosets)[g.inv((*shared_reps)[a])];
        },
        std::move(gens),
        limits);
    GroupHom proj(g, q, std::move(coset_of));
    return {std::move(q), std::move(proj), std::move(reps)};
  }

  /// Invariant factors of an abelian group, by repeatedly splitting off a
  /// cyclic subgroup of maximal element order (always a direct summand) and
  /// passing to the quotient.
  inline AbelianInvariants abelian_invariants(FiniteGroup const& g) {
    if (!g.is_abelian()) {
      throw NotAbelian("abelian_invariants: " + g.label() + " is not abelian");
    }
    std::vector<BigInt> factors;
    FiniteGroup         cur = g;
    while (cur.order() > 1) {
      Elem          best       = identity_elem;
      std::uint64_t best_order = 1;
      for (Elem x = 1; x < cur.order(); ++x) {
        std::uint64_t o = cur.element_order(x);
        if (o > best_order) {
          best_order = o;
          best       = x;
        }
      }
      factors.push_back(BigInt(best_order));
      cur = quotient(cur, subgroup_closure(cur, std::vector<Elem>{best})).group;
    }
    std::reverse(factors.begin(), factors.end());
    return {0, std::move(factors)};
  }

  /// G / [G, G].
  inline Quotient abelianization_quotient(FiniteGroup const& g,
                                          Limits const&      limits = {}) {
    return quotient(g, commutator_subgroup(g), limits);
  }

  inline AbelianInvariants abelianization(FiniteGroup const& g,
                                          Limits const&      limits = {}) {
    return abelian_invariants(abelianization_quotient(g, limits).group);
  }

}  // namespace wreathlab

#endif  // WREATHLAB_QUOTIENT_HPP_
