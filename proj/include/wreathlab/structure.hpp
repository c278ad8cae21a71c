#ifndef WREATHLAB_STRUCTURE_HPP_
#define WREATHLAB_STRUCTURE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "builders.hpp"
#include "hom.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "subgroup.hpp"
#include "wreath.hpp"

namespace wreathlab {

  ////////////////////////////////////////////////////////////////////////
  // Abelian normal closures and the radical A(X)
  ////////////////////////////////////////////////////////////////////////

  /// flags[x] is set iff the normal closure of x is abelian.  The normal
  /// closure is generated by the class of x, and conjugation permutes that
  /// class, so it is abelian iff x commutes with each of its conjugates.
  inline std::vector<char> abelian_normal_closure_flags(FiniteGroup const& g) {
    std::vector<char> flags(g.order(), 0);
    for (auto const& cls : conjugacy_classes(g)) {
      Elem const x       = cls.front();
      bool       abelian = true;
      for (Elem y : cls) {
        if (!g.commute(x, y)) {
          abelian = false;
          break;
        }
      }
      if (abelian) {
        for (Elem y : cls) {
          flags[y] = 1;
        }
      }
    }
    return flags;
  }

  /// A(X): the subgroup generated by all abelian normal subgroups, computed
  /// as the subgroup generated by the elements with abelian normal closure.
  /// Normal, but not abelian in general.
  inline Subgroup abelian_normal_radical(FiniteGroup const& g) {
    auto const     flags = abelian_normal_closure_flags(g);
    ClosureBuilder b(g);
    for (Elem x = 0; x < g.order(); ++x) {
      if (flags[x]) {
        b.add(x);
      }
    }
    return b.subgroup();
  }

  ////////////////////////////////////////////////////////////////////////
  // Conditions (*) and (**)
  ////////////////////////////////////////////////////////////////////////

  struct ConditionWitness {
    bool                holds = true;
    std::optional<Elem> witness_element;
  };

  /// (**): ker sigma contains no non-trivial abelian normal subgroup of G.
  /// Fails with the least non-trivial g in ker sigma whose normal closure is
  /// abelian.
  inline ConditionWitness check_condition_double_star(FiniteGroup const& g,
                                                      GroupHom const&    sigma) {
    auto const flags = abelian_normal_closure_flags(g);
    for (Elem x = 1; x < g.order(); ++x) {
      if (sigma(x) == identity_elem && flags[x]) {
        return {false, x};
      }
    }
    return {true, std::nullopt};
  }

  /// (*): every abelian normal subgroup of W lies in H^n.  Fails with the
  /// least element outside H^n whose normal closure is abelian.
  inline ConditionWitness check_condition_star(WreathGroup const& w) {
    auto const flags = abelian_normal_closure_flags(w.group);
    for (Elem x = 0; x < w.group.order(); ++x) {
      if (flags[x] && w.pi(x) != identity_elem) {
        return {false, x};
      }
    }
    return {true, std::nullopt};
  }

  namespace detail {
    inline std::vector<Hypothesis> surjective_and_degree(WreathGroup const& w,
                                                         int min_degree) {
      return {{"sigma surjective", w.sigma_surjective()},
              {"n >= " + std::to_string(min_degree), w.n >= min_degree}};
    }

    inline nlohmann::json to_json(ConditionWitness const& c) {
      nlohmann::json j = {{"holds", c.holds}};
      if (c.witness_element) {
        j["witness"] = *c.witness_element;
      }
      return j;
    }
  }  // namespace detail

  /// (*) and (**) decided independently; equal iff they agree.
  inline TheoremReport verify_star_equivalence(WreathGroup const& w) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem    = "star-equivalence";
    r.hypotheses = detail::surjective_and_degree(w, 5);
    auto const star  = check_condition_star(w);
    auto const dstar = check_condition_double_star(w.G, w.sigma);
    r.lhs            = detail::to_json(star);
    r.rhs            = detail::to_json(dstar);
    std::optional<Elem> witness
        = star.witness_element ? star.witness_element
                               : (dstar.witness_element
                                      ? std::optional<Elem>(
                                          w.embed_top(*dstar.witness_element))
                                      : std::nullopt);
    r.conclude(star.holds == dstar.holds, witness);
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Center and abelianization
  ////////////////////////////////////////////////////////////////////////

  /// Z(W) by brute force against Delta(Z(H)) x (Z(G) meet ker sigma).
  inline TheoremReport verify_center_formula(WreathGroup const& w) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem    = "center-formula";
    r.hypotheses = {{"sigma surjective", w.sigma_surjective()},
                    {"H non-trivial", w.H.order() > 1}};

    Subgroup const lhs = center(w.group);

    std::vector<Elem> diag;
    Subgroup const    zh = center(w.H);
    for (Elem z : zh.members()) {
      diag.push_back(w.diagonal(z));
    }
    std::vector<Elem> top;
    Subgroup const    zg = center(w.G);
    for (Elem g : zg.members()) {
      if (w.sigma(g) == identity_elem) {
        top.push_back(w.embed_top(g));
      }
    }
    std::optional<Elem> structural_failure;
    for (Elem a : diag) {
      for (Elem b : top) {
        if (!w.group.commute(a, b) && !structural_failure) {
          structural_failure = w.group.mul(a, b);
        }
        if (a == b && a != identity_elem && !structural_failure) {
          structural_failure = a;
        }
      }
    }
    std::vector<Elem> product;
    for (Elem a : diag) {
      for (Elem b : top) {
        product.push_back(w.group.mul(a, b));
      }
    }
    Subgroup const rhs(w.group, product);

    r.lhs = to_json(lhs);
    r.rhs = {{"subgroup", to_json(rhs)},
             {"diagonal_center_order", diag.size()},
             {"central_kernel_order", top.size()}};

    std::optional<Elem> witness = structural_failure;
    if (!witness) {
      for (Elem x = 0; x < w.group.order(); ++x) {
        if (lhs.contains(x) != rhs.contains(x)) {
          witness = x;
          break;
        }
      }
    }
    r.conclude(!witness, witness);
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

  namespace detail {
    inline std::map<std::uint64_t, std::size_t> order_census(
        FiniteGroup const& a) {
      std::map<std::uint64_t, std::size_t> census;
      for (Elem x = 0; x < a.order(); ++x) {
        ++census[a.element_order(x)];
      }
      return census;
    }
  }  // namespace detail

  /// W^ab against H^ab x G^ab, compared by invariant factors.
  inline TheoremReport verify_abelianization(WreathGroup const& w,
                                             Limits const&      limits = {}) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem    = "abelianization";
    r.hypotheses = {{"sigma surjective", w.sigma_surjective()}};

    Quotient const          wab = abelianization_quotient(w.group, limits);
    AbelianInvariants const lhs = abelian_invariants(wab.group);
    FiniteGroup const       hg  = direct_product(
        abelianization_quotient(w.H, limits).group,
        abelianization_quotient(w.G, limits).group,
        limits);
    AbelianInvariants const rhs = abelian_invariants(hg);
    r.lhs                       = to_json(lhs);
    r.rhs                       = to_json(rhs);

    std::optional<Elem> witness;
    if (!(lhs == rhs)) {
      // Finite abelian groups are determined by their element-order census;
      // report an element of W whose image has an over-represented order.
      auto const ca = detail::order_census(wab.group);
      auto const cb = detail::order_census(hg);
      for (auto const& [d, count] : ca) {
        auto it = cb.find(d);
        if (it == cb.end() || it->second < count) {
          for (Elem x = 0; x < w.group.order() && !witness; ++x) {
            if (wab.group.element_order(wab.projection(x)) == d) {
              witness = x;
            }
          }
          break;
        }
      }
      if (!witness) {
        witness  = identity_elem;
        r.note   = "W^ab is smaller than H^ab x G^ab";
      }
    }
    r.conclude(lhs == rhs, witness);
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pure subgroup, characteristicity, rigidity
  ////////////////////////////////////////////////////////////////////////

  /// Certifies pi^-1(ker sigma) = H^n x ker sigma: the product set of the two
  /// embedded factors is the preimage, they meet trivially, and they commute
  /// elementwise.
  inline TheoremReport pure_subgroup_split(WreathGroup const& w) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem = "pure-splitting";

    Subgroup const ker  = w.kernel_sigma();
    Subgroup const pw   = preimage_of(w.pi, ker);
    Subgroup const base = w.base_subgroup();
    std::vector<Elem> top;
    for (Elem g : ker.members()) {
      top.push_back(w.embed_top(g));
    }

    std::optional<Elem> witness;
    std::vector<Elem>   product;
    product.reserve(base.size() * top.size());
    bool commuting = true;
    for (Elem b : base.members()) {
      for (Elem t : top) {
        product.push_back(w.group.mul(b, t));
        if (commuting && !w.group.commute(b, t)) {
          commuting = false;
          witness   = w.group.mul(b, t);
        }
      }
    }
    std::size_t meet = 0;
    for (Elem t : top) {
      if (base.contains(t)) {
        ++meet;
        if (t != identity_elem && !witness) {
          witness = t;
        }
      }
    }
    Subgroup const prod(w.group, product);
    bool const     same_set = prod == pw;
    if (!same_set && !witness) {
      for (Elem x = 0; x < w.group.order(); ++x) {
        if (prod.contains(x) != pw.contains(x)) {
          witness = x;
          break;
        }
      }
    }
    r.lhs = {{"pure_subgroup_order", pw.size()}};
    r.rhs = {{"base_order", base.size()},
             {"kernel_order", ker.size()},
             {"product_equals_preimage", same_set},
             {"intersection_trivial", meet == 1},
             {"factors_commute", commuting}};
    r.conclude(same_set && meet == 1 && commuting, witness);
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

  /// True iff phi(S) = S for every phi in auts (normally automorphisms(G)).
  inline bool is_characteristic(Subgroup const&              s,
                                std::vector<GroupHom> const& auts) {
    for (auto const& phi : auts) {
      for (Elem x : s.members()) {
        if (!s.contains(phi(x))) {
          return false;
        }
      }
    }
    return true;
  }

  /// Isomorphism-invariant data of X attached to its radical A(X).  Under
  /// (*) the radical of a wreath pullback is H^n and the quotient is G, so
  /// isomorphic pullbacks satisfying (*) share these fingerprints.
  struct RigidityFingerprint {
    std::size_t                      radical_order = 0;
    bool                             radical_abelian = false;
    std::optional<AbelianInvariants> radical_invariants;
    std::size_t                      quotient_order = 0;
    AbelianInvariants                quotient_abelianization;
    std::size_t                      quotient_class_count = 0;

    friend bool operator==(RigidityFingerprint const&,
                           RigidityFingerprint const&) = default;

    nlohmann::json to_json() const {
      nlohmann::json j = {{"radical_order", radical_order},
                          {"radical_abelian", radical_abelian},
                          {"quotient_order", quotient_order},
                          {"quotient_abelianization",
                           wreathlab::to_json(quotient_abelianization)},
                          {"quotient_class_count", quotient_class_count}};
      if (radical_invariants) {
        j["radical_invariants"] = wreathlab::to_json(*radical_invariants);
      }
      return j;
    }
  };

  inline RigidityFingerprint rigidity_fingerprint(FiniteGroup const& x,
                                                  Limits const& limits = {}) {
    RigidityFingerprint f;
    Subgroup const      a = abelian_normal_radical(x);
    f.radical_order       = a.size();
    f.radical_abelian     = is_abelian(a);
    if (f.radical_abelian) {
      // The radical as a group in its own right: an abelian group's
      // invariants only need its element orders and a quotient chain, so
      // rebuild it on its own indices.
      std::vector<Elem> index(x.order(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        index[a.members()[i]] = static_cast<Elem>(i);
      }
      auto              members = std::make_shared<std::vector<Elem>>(
          a.members().begin(), a.members().end());
      auto              shared_index = std::make_shared<std::vector<Elem>>(index);
      std::vector<Elem> gens;
      for (Elem gsub : generating_set(a)) {
        gens.push_back(index[gsub]);
      }
      FiniteGroup ag = FiniteGroup::from_rule(
          x.label() + ".A",
          static_cast<Elem>(a.size()),
          [x, members, shared_index](Elem p, Elem q) {
            return (*shared_index)[x.mul((*members)[p], (*members)[q])];
          },
          [x, members, shared_index](Elem p) {
            return (*shared_index)[x.inv((*members)[p])];
          },
          std::move(gens),
          limits);
      f.radical_invariants = abelian_invariants(ag);
    }
    Quotient const q          = quotient(x, a, limits);
    f.quotient_order          = q.group.order();
    f.quotient_abelianization = abelianization(q.group, limits);
    f.quotient_class_count    = conjugacy_classes(q.group).size();
    return f;
  }

  inline RigidityFingerprint rigidity_fingerprint(WreathGroup const& w,
                                                  Limits const& limits = {}) {
    return rigidity_fingerprint(w.group, limits);
  }

}  // namespace wreathlab

#endif  // WREATHLAB_STRUCTURE_HPP_
