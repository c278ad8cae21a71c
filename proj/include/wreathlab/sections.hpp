#ifndef WREATHLAB_SECTIONS_HPP_
#define WREATHLAB_SECTIONS_HPP_

#include <optional>
#include <vector>

#include "hom.hpp"

namespace wreathlab {

  /// A homomorphism s with f(s(k)) = k for all k, if one exists.  f must be
  /// surjective.  Backtracks over preimages of the images of a greedy
  /// generating set of the target; the first section in lexicographic order
  /// of those choices is returned.
  inline std::optional<GroupHom> find_section(GroupHom const& f) {
    if (!f.is_surjective()) {
      throw InvalidArgument("find_section: the map is not surjective");
    }
    FiniteGroup const& g = f.source();
    FiniteGroup const& k = f.target();
    auto const         gens = greedy_generating_set(k);
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (Elem x = 0; x < g.order(); ++x) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (f(x) == gens[i]) {
          candidates[i].push_back(x);
        }
      }
    }
    std::vector<Elem>       images(gens.size(), identity_elem);
    std::vector<Elem>       map;
    std::optional<GroupHom> found;
    auto search = [&](auto&& self, std::size_t depth) -> void {
      if (depth == gens.size()) {
        detail::consistent_prefix(k, g, gens, images, gens.size(), map);
        found = GroupHom::unchecked(k, g, map);
        return;
      }
      for (Elem y : candidates[depth]) {
        images[depth] = y;
        if (detail::consistent_prefix(k, g, gens, images, depth + 1, map)) {
          self(self, depth + 1);
          if (found) {
            return;
          }
        }
      }
    };
    search(search, 0);
    return found;
  }

  inline bool section_exists(GroupHom const& f) {
    return find_section(f).has_value();
  }

}  // namespace wreathlab

#endif  // WREATHLAB_SECTIONS_HPP_
