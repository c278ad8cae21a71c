#ifndef WREATHLAB_HOM_HPP_
#define WREATHLAB_HOM_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finite_group.hpp"
#include "subgroup.hpp"

namespace wreathlab {

  /// True iff `images` defines a homomorphism source -> target.  Groups with
  /// a stored table are checked on every product; larger ones on every edge
  /// x -> x s of the Cayley graph (s a generator), which is equivalent.
  inline bool is_homomorphism(FiniteGroup const&    source,
                              FiniteGroup const&    target,
                              std::span<Elem const> images) {
    if (images.size() != source.order()) {
      return false;
    }
    for (Elem v : images) {
      if (v >= target.order()) {
        return false;
      }
    }
    if (images[identity_elem] != identity_elem) {
      return false;
    }
    Elem const n = source.order();
    if (source.has_table()) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (images[source.mul(x, y)] != target.mul(images[x], images[y])) {
            return false;
          }
        }
      }
      return true;
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem s : source.generators()) {
        if (images[source.mul(x, s)] != target.mul(images[x], images[s])) {
          return false;
        }
      }
    }
    return true;
  }

  /// A homomorphism recorded element by element.
  class GroupHom {
   public:
    GroupHom() = default;

    /// Validates and throws NotAHomomorphism on failure.
    GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
        : _source(std::move(source)),
          _target(std::move(target)),
          _images(std::move(images)) {
      if (!is_homomorphism(_source, _target, _images)) {
        throw NotAHomomorphism("map " + _source.label() + " -> "
                               + _target.label()
                               + " is not a homomorphism");
      }
    }

    /// For maps that are homomorphisms by construction and re-validated by
    /// the caller.
    static GroupHom unchecked(FiniteGroup       source,
                              FiniteGroup       target,
                              std::vector<Elem> images) {
      GroupHom h;
      h._source = std::move(source);
      h._target = std::move(target);
      h._images = std::move(images);
      return h;
    }

    FiniteGroup const& source() const noexcept {
      return _source;
    }

    FiniteGroup const& target() const noexcept {
      return _target;
    }

    std::vector<Elem> const& images() const noexcept {
      return _images;
    }

    Elem operator()(Elem x) const {
      return _images[x];
    }

    bool is_valid() const {
      return is_homomorphism(_source, _target, _images);
    }

    bool is_injective() const {
      std::vector<char> hit(_target.order(), 0);
      for (Elem v : _images) {
        if (hit[v]) {
          return false;
        }
        hit[v] = 1;
      }
      return true;
    }

    bool is_surjective() const {
      std::vector<char> hit(_target.order(), 0);
      std::size_t       count = 0;
      for (Elem v : _images) {
        if (!hit[v]) {
          hit[v] = 1;
          ++count;
        }
      }
      return count == _target.order();
    }

    bool is_bijective() const {
      return _source.order() == _target.order() && is_injective();
    }

    friend bool operator==(GroupHom const& a, GroupHom const& b) {
      return a._images == b._images && a._source.order() == b._source.order()
             && a._target.order() == b._target.order();
    }

   private:
    FiniteGroup       _source;
    FiniteGroup       _target;
    std::vector<Elem> _images;
  };

  inline GroupHom identity_hom(FiniteGroup const& g) {
    std::vector<Elem> images(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      images[x] = x;
    }
    return GroupHom::unchecked(g, g, std::move(images));
  }

  inline GroupHom trivial_hom(FiniteGroup const& source,
                              FiniteGroup const& target) {
    return GroupHom::unchecked(
        source, target, std::vector<Elem>(source.order(), identity_elem));
  }

  /// f o g (apply g first).
  inline GroupHom compose(GroupHom const& f, GroupHom const& g) {
    if (g.target().order() != f.source().order()) {
      throw InvalidArgument("compose: target of the inner map is not the "
                            "source of the outer map");
    }
    std::vector<Elem> images(g.source().order());
    for (Elem x = 0; x < g.source().order(); ++x) {
      images[x] = f(g(x));
    }
    return GroupHom::unchecked(g.source(), f.target(), std::move(images));
  }

  inline GroupHom inverse_hom(GroupHom const& f) {
    if (!f.is_bijective()) {
      throw InvalidArgument("inverse_hom: map is not bijective");
    }
    std::vector<Elem> images(f.source().order());
    for (Elem x = 0; x < f.source().order(); ++x) {
      images[f(x)] = x;
    }
    return GroupHom::unchecked(f.target(), f.source(), std::move(images));
  }

  /// Inner automorphism x -> a x a^-1.
  inline GroupHom inner_automorphism(FiniteGroup const& g, Elem a) {
    std::vector<Elem> images(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      images[x] = g.conj(a, x);
    }
    return GroupHom::unchecked(g, g, std::move(images));
  }

  /// Extends generator images to a homomorphism by breadth-first search over
  /// the Cayley graph, then validates the result against the multiplication.
  inline GroupHom hom_from_images(FiniteGroup const&       g,
                                  FiniteGroup const&       k,
                                  std::vector<Elem> const& gens,
                                  std::vector<Elem> const& gen_images) {
    if (gens.size() != gen_images.size()) {
      throw InvalidArgument("hom_from_images: generator and image lists "
                            "differ in length");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] >= g.order() || gen_images[i] >= k.order()) {
        throw InvalidArgument("hom_from_images: index out of range");
      }
    }
    Elem const        unset = g.order();
    std::vector<Elem> images(g.order(), unset);
    std::vector<Elem> queue{identity_elem};
    images[identity_elem] = identity_elem;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y  = g.mul(x, gens[j]);
        Elem fy = k.mul(images[x], gen_images[j]);
        if (images[y] == unset) {
          images[y] = fy;
          queue.push_back(y);
        } else if (images[y] != fy) {
          throw NotAHomomorphism("hom_from_images: a relation of "
                                 + g.label() + " is violated in "
                                 + k.label());
        }
      }
    }
    if (queue.size() != g.order()) {
      throw NotGenerating("hom_from_images: the given elements generate a "
                          "subgroup of order "
                          + std::to_string(queue.size()) + " in "
                          + g.label());
    }
    return GroupHom(g, k, std::move(images));
  }

  struct KernelImage {
    Subgroup kernel;
    Subgroup image;
  };

  inline KernelImage hom_kernel_image(GroupHom const& f) {
    std::vector<Elem> ker;
    std::vector<Elem> img;
    std::vector<char> hit(f.target().order(), 0);
    for (Elem x = 0; x < f.source().order(); ++x) {
      Elem y = f(x);
      if (y == identity_elem) {
        ker.push_back(x);
      }
      if (!hit[y]) {
        hit[y] = 1;
        img.push_back(y);
      }
    }
    return {Subgroup(f.source(), std::move(ker)),
            Subgroup(f.target(), std::move(img))};
  }

  /// Image of a subgroup under f, as a subgroup of f's target.
  inline Subgroup image_of(GroupHom const& f, Subgroup const& s) {
    std::vector<Elem> m;
    m.reserve(s.size());
    for (Elem x : s.members()) {
      m.push_back(f(x));
    }
    return Subgroup(f.target(), std::move(m));
  }

  /// Preimage of a subgroup of f's target.
  inline Subgroup preimage_of(GroupHom const& f, Subgroup const& s) {
    std::vector<Elem> m;
    for (Elem x = 0; x < f.source().order(); ++x) {
      if (s.contains(f(x))) {
        m.push_back(x);
      }
    }
    return Subgroup(f.source(), std::move(m));
  }

  /// Generating set built greedily: at each step add the element whose
  /// closure gain is largest (least index on ties), until g is generated.
  inline std::vector<Elem> greedy_generating_set(FiniteGroup const& g) {
    ClosureBuilder    current(g);
    std::vector<Elem> gens;
    while (current.size() < g.order()) {
      Elem        best      = identity_elem;
      std::size_t best_size = 0;
      for (Elem x = 1; x < g.order(); ++x) {
        if (current.contains(x)) {
          continue;
        }
        ClosureBuilder trial = current;
        trial.add(x);
        if (trial.size() > best_size) {
          best_size = trial.size();
          best      = x;
          if (best_size == g.order()) {
            break;
          }
        }
      }
      gens.push_back(best);
      current.add(best);
    }
    return gens;
  }

  namespace detail {

    // Extends the partial assignment gens[0..k) -> images[0..k) over the
    // subgroup those generators span; false if a relation is violated.
    inline bool consistent_prefix(FiniteGroup const&       g,
                                  FiniteGroup const&       target,
                                  std::vector<Elem> const& gens,
                                  std::vector<Elem> const& images,
                                  std::size_t              k,
                                  std::vector<Elem>&       map) {
      Elem const unset = g.order();
      map.assign(g.order(), unset);
      map[identity_elem] = identity_elem;
      std::vector<Elem> queue{identity_elem};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem x = queue[i];
        for (std::size_t j = 0; j < k; ++j) {
          Elem y  = g.mul(x, gens[j]);
          Elem fy = target.mul(map[x], images[j]);
          if (map[y] == unset) {
            map[y] = fy;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace detail

  /// Every homomorphism source -> target, in lexicographic order of the
  /// images of greedy_generating_set(source).  With surjective_only, the
  /// non-surjective ones are dropped.
  inline std::vector<GroupHom> homomorphisms(FiniteGroup const& source,
                                             FiniteGroup const& target,
                                             bool surjective_only = false) {
    auto const               gens = greedy_generating_set(source);
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const order = source.element_order(gens[i]);
      for (Elem y = 0; y < target.order(); ++y) {
        if (order % target.element_order(y) == 0) {
          candidates[i].push_back(y);
        }
      }
    }
    std::vector<GroupHom> result;
    std::vector<Elem>     images(gens.size(), identity_elem);
    std::vector<Elem>     map;
    auto search = [&](auto&& self, std::size_t depth) -> void {
      if (depth == gens.size()) {
        detail::consistent_prefix(source, target, gens, images, gens.size(), map);
        GroupHom f = GroupHom::unchecked(source, target, map);
        if (!surjective_only || f.is_surjective()) {
          result.push_back(std::move(f));
        }
        return;
      }
      for (Elem y : candidates[depth]) {
        images[depth] = y;
        if (detail::consistent_prefix(source, target, gens, images, depth + 1,
                                      map)) {
          self(self, depth + 1);
        }
      }
    };
    search(search, 0);
    return result;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_HOM_HPP_
