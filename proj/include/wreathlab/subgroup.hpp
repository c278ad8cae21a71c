#ifndef WREATHLAB_SUBGROUP_HPP_
#define WREATHLAB_SUBGROUP_HPP_

#include <algorithm>
#include <span>
#include <vector>

#include "finite_group.hpp"

namespace wreathlab {

  /// A subgroup of a FiniteGroup, stored as the sorted list of its members
  /// plus a membership mask over the parent.
  class Subgroup {
   public:
    Subgroup() = default;

    /// `members` must be closed under the group operations; use
    /// subgroup_closure when that is not known.
    Subgroup(FiniteGroup parent, std::vector<Elem> members)
        : _parent(std::move(parent)),
          _members(std::move(members)),
          _mask(_parent.order(), 0) {
      std::sort(_members.begin(), _members.end());
      _members.erase(std::unique(_members.begin(), _members.end()),
                     _members.end());
      for (Elem x : _members) {
        _mask[x] = 1;
      }
    }

    static Subgroup trivial(FiniteGroup const& parent) {
      return Subgroup(parent, {identity_elem});
    }

    static Subgroup whole(FiniteGroup const& parent) {
      std::vector<Elem> all(parent.order());
      for (Elem x = 0; x < parent.order(); ++x) {
        all[x] = x;
      }
      return Subgroup(parent, std::move(all));
    }

    FiniteGroup const& parent() const noexcept {
      return _parent;
    }

    std::span<Elem const> members() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool contains(Elem x) const {
      return _mask[x] != 0;
    }

    bool is_trivial() const noexcept {
      return _members.size() == 1;
    }

    bool is_subset_of(Subgroup const& other) const {
      return std::all_of(_members.begin(), _members.end(), [&](Elem x) {
        return other.contains(x);
      });
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._parent.order() == b._parent.order() && a._members == b._members;
    }

   private:
    FiniteGroup       _parent;
    std::vector<Elem> _members;
    std::vector<char> _mask;
  };

  /// Incremental subgroup closure: the subgroup generated by the elements
  /// added so far, grown by breadth-first right multiplication.
  class ClosureBuilder {
   public:
    explicit ClosureBuilder(FiniteGroup group)
        : _group(std::move(group)), _mask(_group.order(), 0) {
      _mask[identity_elem] = 1;
      _members.push_back(identity_elem);
    }

    /// Returns false if x was already a member.
    bool add(Elem x) {
      if (_mask[x]) {
        return false;
      }
      _gens.push_back(x);
      std::size_t const old = _members.size();
      for (std::size_t i = 0; i < old; ++i) {
        push(_group.mul(_members[i], x));
      }
      for (std::size_t i = old; i < _members.size(); ++i) {
        for (Elem g : _gens) {
          push(_group.mul(_members[i], g));
        }
      }
      return true;
    }

    bool contains(Elem x) const {
      return _mask[x] != 0;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    std::vector<Elem> const& generators() const noexcept {
      return _gens;
    }

    std::vector<Elem> const& members() const noexcept {
      return _members;
    }

    Subgroup subgroup() const {
      return Subgroup(_group, _members);
    }

   private:
    void push(Elem y) {
      if (!_mask[y]) {
        _mask[y] = 1;
        _members.push_back(y);
      }
    }

    FiniteGroup       _group;
    std::vector<char> _mask;
    std::vector<Elem> _members;
    std::vector<Elem> _gens;
  };

  inline Subgroup subgroup_closure(FiniteGroup const&    g,
                                   std::span<Elem const> seeds) {
    ClosureBuilder b(g);
    for (Elem s : seeds) {
      if (s >= g.order()) {
        throw InvalidArgument("subgroup_closure: seed out of range");
      }
      b.add(s);
    }
    return b.subgroup();
  }

  inline Subgroup subgroup_closure(FiniteGroup const&          g,
                                   std::vector<Elem> const&    seeds) {
    return subgroup_closure(g, std::span<Elem const>(seeds));
  }

  /// Smallest normal subgroup containing the seeds: every generator found so
  /// far is conjugated by every generator of g until nothing new appears.
  inline Subgroup normal_closure(FiniteGroup const&    g,
                                 std::span<Elem const> seeds) {
    ClosureBuilder    b(g);
    std::vector<Elem> queue;
    for (Elem s : seeds) {
      if (s >= g.order()) {
        throw InvalidArgument("normal_closure: seed out of range");
      }
      if (b.add(s)) {
        queue.push_back(s);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Elem t : g.generators()) {
        Elem c = g.conj(t, queue[i]);
        if (b.add(c)) {
          queue.push_back(c);
        }
      }
    }
    return b.subgroup();
  }

  inline Subgroup normal_closure(FiniteGroup const&       g,
                                 std::vector<Elem> const& seeds) {
    return normal_closure(g, std::span<Elem const>(seeds));
  }

  /// A generating set of a subgroup, found by the same greedy scan used for
  /// groups without recorded generators.
  inline std::vector<Elem> generating_set(Subgroup const& s) {
    ClosureBuilder b(s.parent());
    for (Elem x : s.members()) {
      if (b.size() == s.size()) {
        break;
      }
      b.add(x);
    }
    return b.generators();
  }

  inline bool is_normal(FiniteGroup const& g, Subgroup const& n) {
    for (Elem x : n.members()) {
      for (Elem t : g.generators()) {
        if (!n.contains(g.conj(t, x))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_abelian(Subgroup const& s) {
    auto gens = generating_set(s);
    auto const& g = s.parent();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!g.commute(gens[i], gens[j])) {
          return false;
        }
      }
    }
    return true;
  }

  /// Elements commuting with every generator (hence with all of g).
  inline Subgroup center(FiniteGroup const& g) {
    std::vector<Elem> z;
    for (Elem x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Elem t : g.generators()) {
        if (!g.commute(x, t)) {
          central = false;
          break;
        }
      }
      if (central) {
        z.push_back(x);
      }
    }
    return Subgroup(g, std::move(z));
  }

  /// Conjugacy classes as orbits of conjugation by the generators.  Blocks
  /// are sorted internally and ordered by least member.
  inline std::vector<std::vector<Elem>> conjugacy_classes(FiniteGroup const& g) {
    std::vector<std::vector<Elem>> classes;
    std::vector<char>              seen(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<Elem> orbit{x};
      seen[x] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (Elem t : g.generators()) {
          Elem y = g.conj(t, orbit[i]);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes.push_back(std::move(orbit));
    }
    return classes;
  }

  /// Derived subgroup: normal closure of the commutators of generator pairs.
  inline Subgroup commutator_subgroup(FiniteGroup const& g) {
    std::vector<Elem> seeds;
    auto              gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        seeds.push_back(g.commutator(gens[i], gens[j]));
      }
    }
    return normal_closure(g, seeds);
  }

  /// Subgroup generated by two subgroups.
  inline Subgroup join(Subgroup const& a, Subgroup const& b) {
    ClosureBuilder cb(a.parent());
    for (Elem x : generating_set(a)) {
      cb.add(x);
    }
    for (Elem x : generating_set(b)) {
      cb.add(x);
    }
    return cb.subgroup();
  }

  inline Subgroup intersection(Subgroup const& a, Subgroup const& b) {
    std::vector<Elem> m;
    for (Elem x : a.members()) {
      if (b.contains(x)) {
        m.push_back(x);
      }
    }
    return Subgroup(a.parent(), std::move(m));
  }

}  // namespace wreathlab

#endif  // WREATHLAB_SUBGROUP_HPP_
