#ifndef WREATHLAB_TWISTED_HPP_
#define WREATHLAB_TWISTED_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "finite_group.hpp"
#include "hom.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "subgroup.hpp"
#include "wreath.hpp"

namespace wreathlab {

  /// Every automorphism of g, by backtracking over the images of a greedy
  /// generating set with the relations checked after each assignment.
  /// Candidates for a generator share its element order and class size.
  /// Returned in lexicographic order of the generator-image tuples.
  inline std::vector<GroupHom> automorphisms(FiniteGroup const& g,
                                             Limits const&      limits = {}) {
    if (g.order() > limits.max_aut_order) {
      throw CapExceeded("automorphisms: order " + std::to_string(g.order())
                        + " exceeds the automorphism cap "
                        + std::to_string(limits.max_aut_order));
    }
    if (g.order() == 1) {
      return {identity_hom(g)};
    }
    auto const gens = greedy_generating_set(g);

    std::vector<std::size_t> class_size(g.order());
    for (auto const& c : conjugacy_classes(g)) {
      for (Elem x : c) {
        class_size[x] = c.size();
      }
    }
    std::vector<std::uint64_t> elem_order(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      elem_order[x] = g.element_order(x);
    }
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Elem y = 0; y < g.order(); ++y) {
        if (elem_order[y] == elem_order[gens[i]]
            && class_size[y] == class_size[gens[i]]) {
          candidates[i].push_back(y);
        }
      }
    }

    std::vector<GroupHom> result;
    std::vector<Elem>     images(gens.size(), identity_elem);
    std::vector<Elem>     map;
    auto                  search = [&](auto&& self, std::size_t depth) -> void {
      if (depth == gens.size()) {
        detail::consistent_prefix(g, g, gens, images, gens.size(), map);
        std::vector<char> hit(g.order(), 0);
        for (Elem v : map) {
          if (hit[v]) {
            return;
          }
          hit[v] = 1;
        }
        result.push_back(GroupHom::unchecked(g, g, map));
        return;
      }
      for (Elem y : candidates[depth]) {
        images[depth] = y;
        if (detail::consistent_prefix(g, g, gens, images, depth + 1, map)) {
          self(self, depth + 1);
        }
      }
    };
    search(search, 0);
    return result;
  }

  /// Reidemeister classes of an endomorphism: the orbits of y -> z y phi(z)^-1.
  struct TwistedClassPartition {
    FiniteGroup                    group;
    GroupHom                       endo;
    std::vector<std::vector<Elem>> blocks;

    std::size_t count() const noexcept {
      return blocks.size();
    }
  };

  /// Union-find over every pair (y, z), merging y with z y phi(z)^-1.
  inline TwistedClassPartition reidemeister_number(FiniteGroup const& g,
                                                   GroupHom const&    phi) {
    if (phi.source().order() != g.order() || phi.target().order() != g.order()) {
      throw InvalidArgument("reidemeister_number: phi must be an endomorphism "
                            "of "
                            + g.label());
    }
    Elem const               n = g.order();
    std::vector<std::size_t> rank(n), parent(n);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(),
                                                          parent.data());
    for (Elem x = 0; x < n; ++x) {
      sets.make_set(x);
    }
    for (Elem z = 0; z < n; ++z) {
      Elem const twist = g.inv(phi(z));
      for (Elem y = 0; y < n; ++y) {
        sets.union_set(y, g.mul(g.mul(z, y), twist));
      }
    }
    std::map<std::size_t, std::vector<Elem>> by_root;
    for (Elem x = 0; x < n; ++x) {
      by_root[sets.find_set(x)].push_back(x);
    }
    TwistedClassPartition p{g, phi, {}};
    for (auto& [root, block] : by_root) {
      p.blocks.push_back(std::move(block));
    }
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });
    return p;
  }

  /// The endomorphism of q.group induced by phi; requires phi(N) in N for
  /// the normal subgroup N that q was built from.
  inline GroupHom induced_quotient_map(GroupHom const& phi, Quotient const& q) {
    auto const& proj = q.projection;
    for (Elem x = 0; x < phi.source().order(); ++x) {
      if (proj(x) == identity_elem && proj(phi(x)) != identity_elem) {
        throw NotInvariant("induced_quotient_map: phi does not map the "
                           "normal subgroup into itself");
      }
    }
    std::vector<Elem> images(q.group.order());
    for (Elem c = 0; c < q.group.order(); ++c) {
      images[c] = proj(phi(q.representatives[c]));
    }
    return GroupHom(q.group, q.group, std::move(images));
  }

  inline GroupHom induced_quotient_map(GroupHom const& phi,
                                       Subgroup const& n,
                                       Limits const&   limits = {}) {
    for (Elem x : n.members()) {
      if (!n.contains(phi(x))) {
        throw NotInvariant("induced_quotient_map: phi does not map the "
                           "subgroup into itself");
      }
    }
    return induced_quotient_map(phi, quotient(phi.source(), n, limits));
  }

  /// Finite shadow of the R-infinity transfer along 1 -> H^n -> W -> G -> 1:
  /// for every automorphism phi of W preserving H^n, the Reidemeister
  /// classes of the induced map on W/H^n pull back to disjoint non-empty
  /// unions of classes of phi, so R_W(phi) >= R_{W/H^n}(phi-bar).
  inline TheoremReport extension_inequality_check(WreathGroup const& w,
                                                  Limits const& limits = {}) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem = "extension-inequality";
    if (w.group.order() > limits.max_aut_order) {
      throw CapExceeded("extension_inequality_check: |W| = "
                        + std::to_string(w.group.order())
                        + " exceeds the automorphism cap "
                        + std::to_string(limits.max_aut_order));
    }
    auto const     auts = automorphisms(w.group, limits);
    Subgroup const base = w.base_subgroup();
    Quotient const q    = quotient(w.group, base, limits);

    nlohmann::json      pairs = nlohmann::json::array();
    std::size_t         preserving = 0;
    std::optional<Elem> failure;
    for (std::size_t i = 0; i < auts.size(); ++i) {
      auto const& phi = auts[i];
      if (!(image_of(phi, base) == base)) {
        continue;
      }
      ++preserving;
      auto const rw = reidemeister_number(w.group, phi).count();
      auto const rq
          = reidemeister_number(q.group, induced_quotient_map(phi, q)).count();
      pairs.push_back({rw, rq});
      if (rw < rq && !failure) {
        failure = static_cast<Elem>(i);
      }
    }
    r.lhs = {{"automorphisms", auts.size()},
             {"base_preserving", preserving},
             {"reidemeister_pairs", std::move(pairs)}};
    r.rhs = "R_W(phi) >= R_Q(phi-bar) for every base-preserving phi";
    r.conclude(!failure, failure);
    if (failure) {
      r.note = "witness is the index of the failing automorphism";
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_TWISTED_HPP_
