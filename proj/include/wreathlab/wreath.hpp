#ifndef WREATHLAB_WREATH_HPP_
#define WREATHLAB_WREATH_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "builders.hpp"
#include "finite_group.hpp"
#include "hom.hpp"
#include "permutation.hpp"
#include "subgroup.hpp"

// Permutational wreath pullback H wr_sigma G = H^n x| G.
//
// Action convention (coordinates indexed from 0):
//
//     (g . k)_i = k_{sigma(g)(i)}
//
// and the product is (h, g)(k, x) = (h * (g . k), g x), with H^n multiplied
// coordinatewise.  Together with the right-action product on symmetric(n)
// this is a group law; getting either side of the convention inverted is the
// classic off-by-inverse bug, so the tests check it against hand-evaluated
// products.
//
// Element numbering: coordinate 0 is the least significant digit of the H^n
// part and the G component is most significant, i.e.
//
//     index(h, g) = g * |H|^n + sum_i h_i * |H|^i.

namespace wreathlab {

  struct WreathElement {
    std::vector<Elem> coords;
    Elem              base = identity_elem;

    friend bool operator==(WreathElement const&, WreathElement const&)
        = default;
  };

  class WreathCodec {
   public:
    static constexpr int max_degree = 24;

    WreathCodec() = default;
    WreathCodec(Elem h_order, int n) : _h(h_order), _n(n), _hn(1) {
      for (int i = 0; i < n; ++i) {
        _hn *= h_order;
      }
    }

    Elem base_size() const noexcept {
      return _hn;
    }

    int degree() const noexcept {
      return _n;
    }

    WreathElement decode(Elem x) const {
      WreathElement e;
      e.base = x / _hn;
      Elem c = x % _hn;
      e.coords.resize(static_cast<std::size_t>(_n));
      for (int i = 0; i < _n; ++i) {
        e.coords[i] = c % _h;
        c /= _h;
      }
      return e;
    }

    Elem encode(WreathElement const& e) const {
      return e.base * _hn + encode_coords(e.coords.data());
    }

    void decode_coords(Elem c, Elem* out) const {
      for (int i = 0; i < _n; ++i) {
        out[i] = c % _h;
        c /= _h;
      }
    }

    Elem encode_coords(Elem const* coords) const {
      Elem c = 0;
      for (int i = _n; i-- > 0;) {
        c = c * _h + coords[i];
      }
      return c;
    }

   private:
    Elem _h  = 1;
    int  _n  = 0;
    Elem _hn = 1;
  };

  struct WreathGroup {
    FiniteGroup group;
    FiniteGroup H;
    FiniteGroup G;
    /// direct_power(H, n), the source of embed_base.
    FiniteGroup base_group;
    int         n = 0;
    GroupHom    sigma;
    GroupHom    pi;
    GroupHom    embed_base;
    GroupHom    embed_top;
    WreathCodec codec;
    /// sigma(g) as a one-line permutation, for every g in G.
    std::vector<perm::Permutation> action;

    WreathElement decode(Elem x) const {
      return codec.decode(x);
    }

    Elem encode(WreathElement const& e) const {
      return codec.encode(e);
    }

    /// (h, ..., h) with trivial G component.
    Elem diagonal(Elem h) const {
      std::vector<Elem> c(static_cast<std::size_t>(n), h);
      return codec.encode_coords(c.data());
    }

    /// image(embed_base) = ker(pi): the elements with trivial G component.
    Subgroup base_subgroup() const {
      std::vector<Elem> m(codec.base_size());
      for (Elem c = 0; c < codec.base_size(); ++c) {
        m[c] = c;
      }
      return Subgroup(group, std::move(m));
    }

    Subgroup kernel_sigma() const {
      return hom_kernel_image(sigma).kernel;
    }

    bool sigma_surjective() const {
      return sigma.is_surjective();
    }
  };

  inline WreathGroup build_wreath_pullback(FiniteGroup const& h,
                                           FiniteGroup const& g,
                                           GroupHom const&    sigma,
                                           Limits const&      limits = {}) {
    auto const degree = sigma.target().symmetric_degree();
    if (!degree) {
      throw InvalidArgument("build_wreath_pullback: sigma must map into a "
                            "symmetric group");
    }
    int const n = *degree;
    if (n < 2 || n > WreathCodec::max_degree) {
      throw InvalidArgument("build_wreath_pullback: degree must lie in [2, "
                            + std::to_string(WreathCodec::max_degree) + "]");
    }
    if (!sigma.source().same_as(g)) {
      throw InvalidArgument("build_wreath_pullback: sigma is not defined on "
                            + g.label());
    }
    std::string label = "wreath(" + h.label() + "," + g.label() + ")";
    std::uint64_t order = g.order();
    for (int i = 0; i < n; ++i) {
      order = detail::checked_order_product(order, h.order(), limits, label);
    }

    WreathGroup w;
    w.H     = h;
    w.G     = g;
    w.n     = n;
    w.sigma = sigma;
    w.codec = WreathCodec(h.order(), n);
    w.action.reserve(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      w.action.push_back(permutation_of(sigma.target(), sigma(x)));
    }

    auto const  action = std::make_shared<std::vector<perm::Permutation>>(w.action);
    WreathCodec codec  = w.codec;
    Elem const  hn     = codec.base_size();

    auto mul = [h, g, action, codec, hn, n](Elem x, Elem y) {
      std::array<Elem, WreathCodec::max_degree> a{}, b{}, r{};
      codec.decode_coords(x % hn, a.data());
      codec.decode_coords(y % hn, b.data());
      Elem const  gx = x / hn;
      auto const& p  = (*action)[gx];
      for (int i = 0; i < n; ++i) {
        r[i] = h.mul(a[i], b[p[i]]);
      }
      return g.mul(gx, y / hn) * hn + codec.encode_coords(r.data());
    };
    // (h, g)^-1 = (k, g^-1) with k_{sigma(g)(i)} = h_i^-1
    auto inv = [h, g, action, codec, hn, n](Elem x) {
      std::array<Elem, WreathCodec::max_degree> a{}, r{};
      codec.decode_coords(x % hn, a.data());
      Elem const  gx = x / hn;
      auto const& p  = (*action)[gx];
      for (int i = 0; i < n; ++i) {
        r[p[i]] = h.inv(a[i]);
      }
      return g.inv(gx) * hn + codec.encode_coords(r.data());
    };

    std::vector<Elem> gens;
    Elem              place = 1;
    for (int i = 0; i < n; ++i) {
      for (Elem s : h.generators()) {
        gens.push_back(s * place);
      }
      place *= h.order();
    }
    for (Elem t : g.generators()) {
      gens.push_back(t * hn);
    }
    w.group = FiniteGroup::from_rule(
        label, static_cast<Elem>(order), mul, inv, std::move(gens), limits);

    w.base_group = direct_power(h, n, limits);
    ProductCodec      power_codec(std::vector<Elem>(n, h.order()));
    std::vector<Elem> base_images(w.base_group.order());
    for (Elem b = 0; b < w.base_group.order(); ++b) {
      auto c = power_codec.decode(b);
      base_images[b] = codec.encode_coords(c.data());
    }
    std::vector<Elem> top_images(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      top_images[x] = x * hn;
    }
    std::vector<Elem> pi_images(w.group.order());
    for (Elem x = 0; x < w.group.order(); ++x) {
      pi_images[x] = x / hn;
    }
    w.embed_base = GroupHom(w.base_group, w.group, std::move(base_images));
    w.embed_top  = GroupHom(g, w.group, std::move(top_images));
    w.pi         = GroupHom(w.group, g, std::move(pi_images));
    return w;
  }

  /// Checks pi o embed_top = id, pi o embed_base = 1, ker pi = im embed_base
  /// and im embed_base meets im embed_top trivially.
  inline bool verify_wreath_invariants(WreathGroup const& w) {
    for (Elem x = 0; x < w.G.order(); ++x) {
      if (w.pi(w.embed_top(x)) != x) {
        return false;
      }
    }
    for (Elem b = 0; b < w.base_group.order(); ++b) {
      if (w.pi(w.embed_base(b)) != identity_elem) {
        return false;
      }
    }
    auto ker = hom_kernel_image(w.pi).kernel;
    auto img = hom_kernel_image(w.embed_base).image;
    if (!(ker == img)) {
      return false;
    }
    auto top = hom_kernel_image(w.embed_top).image;
    return intersection(img, top).is_trivial();
  }

  /// Fixed points of the G-action on H^n, as a subgroup of W.group.  When
  /// sigma is surjective this must be the diagonal, and that is asserted.
  inline Subgroup diagonal_fixed_subgroup(WreathGroup const& w) {
    std::vector<Elem>                         fixed;
    std::array<Elem, WreathCodec::max_degree> c{};
    for (Elem code = 0; code < w.codec.base_size(); ++code) {
      w.codec.decode_coords(code, c.data());
      bool is_fixed = true;
      for (Elem t : w.G.generators()) {
        auto const& p = w.action[t];
        for (int i = 0; i < w.n && is_fixed; ++i) {
          is_fixed = c[p[i]] == c[i];
        }
        if (!is_fixed) {
          break;
        }
      }
      if (is_fixed) {
        fixed.push_back(code);
      }
    }
    Subgroup result(w.group, std::move(fixed));
    if (w.sigma_surjective()) {
      std::vector<Elem> diag;
      for (Elem x = 0; x < w.H.order(); ++x) {
        diag.push_back(w.diagonal(x));
      }
      if (!(result == Subgroup(w.group, std::move(diag)))) {
        throw InternalInconsistency("diagonal_fixed_subgroup: fixed points "
                                    "differ from the diagonal although "
                                    "sigma is surjective");
      }
    }
    return result;
  }

  /// G x_{S_n} (H wr S_n): the pairs (g, (h, tau)) with sigma(g) = tau, in
  /// the order they appear when filtering G x (H wr S_n) by index.
  struct FiberProduct {
    FiniteGroup group;
    WreathGroup classical;
    GroupHom    sigma;

    /// Position of the pair (g, w) inside `group`; requires sigma(g) =
    /// pi(w).
    Elem position(Elem g, Elem w) const {
      return g * classical.codec.base_size() + w % classical.codec.base_size();
    }

    std::pair<Elem, Elem> components(Elem x) const {
      Elem const hn = classical.codec.base_size();
      Elem const g  = x / hn;
      return {g, sigma(g) * hn + x % hn};
    }
  };

  inline FiberProduct fiber_product(FiniteGroup const& g,
                                    GroupHom const&    sigma,
                                    FiniteGroup const& h,
                                    int                n,
                                    Limits const&      limits = {}) {
    if (sigma.target().symmetric_degree() != n) {
      throw InvalidArgument("fiber_product: sigma must map into S"
                            + std::to_string(n));
    }
    FiberProduct fp;
    fp.sigma     = sigma;
    FiniteGroup sn = sigma.target();
    fp.classical = build_wreath_pullback(h, sn, identity_hom(sn), limits);
    WreathGroup const& wn = fp.classical;
    Elem const         hn = wn.codec.base_size();

    std::string   label = g.label() + "x_S" + std::to_string(n) + "("
                        + wn.group.label() + ")";
    std::uint64_t order
        = detail::checked_order_product(g.order(), hn, limits, label);

    // Filtration of the direct product: keep (g, w) with sigma(g) = pi(w).
    std::vector<std::pair<Elem, Elem>> members;
    members.reserve(static_cast<std::size_t>(order));
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem w = 0; w < wn.group.order(); ++w) {
        if (wn.pi(w) == sigma(x)) {
          members.emplace_back(x, w);
        }
      }
    }
    if (members.size() != order) {
      throw InternalInconsistency("fiber_product: unexpected filtered size");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (fp.position(members[i].first, members[i].second) != i) {
        throw InternalInconsistency("fiber_product: filtration order differs "
                                    "from the positional formula");
      }
    }

    auto const shared_sigma = std::make_shared<GroupHom>(sigma);
    auto rule = [g, wn, hn, shared_sigma](Elem x, Elem y) {
      Elem const gx = x / hn, gy = y / hn;
      Elem const wx = (*shared_sigma)(gx) * hn + x % hn;
      Elem const wy = (*shared_sigma)(gy) * hn + y % hn;
      Elem const w  = wn.group.mul(wx, wy);
      return g.mul(gx, gy) * hn + w % hn;
    };
    auto inv = [g, wn, hn, shared_sigma](Elem x) {
      Elem const gx = x / hn;
      Elem const wx = (*shared_sigma)(gx) * hn + x % hn;
      return g.inv(gx) * hn + wn.group.inv(wx) % hn;
    };
    fp.group = FiniteGroup::from_rule(
        label, static_cast<Elem>(order), rule, inv, {}, limits);
    return fp;
  }

  /// Phi(h, g) = (g, (h, sigma(g))), validated and checked to be bijective.
  inline GroupHom pullback_isomorphism(WreathGroup const& w,
                                       FiberProduct const& fp) {
    std::vector<Elem> images(w.group.order());
    for (Elem x = 0; x < w.group.order(); ++x) {
      WreathElement e       = w.decode(x);
      WreathElement classic = e;
      classic.base          = w.sigma(e.base);
      images[x] = fp.position(e.base, fp.classical.encode(classic));
    }
    if (!is_homomorphism(w.group, fp.group, images)) {
      throw InternalInconsistency("pullback_isomorphism: Phi is not a "
                                  "homomorphism");
    }
    GroupHom phi = GroupHom::unchecked(w.group, fp.group, std::move(images));
    if (!phi.is_bijective()) {
      throw InternalInconsistency("pullback_isomorphism: Phi is not "
                                  "bijective");
    }
    return phi;
  }

  inline GroupHom pullback_isomorphism(WreathGroup const& w,
                                       Limits const&      limits = {}) {
    return pullback_isomorphism(w, fiber_product(w.G, w.sigma, w.H, w.n, limits));
  }

  namespace detail {
    inline bool same_sigma(GroupHom const& a, GroupHom const& b) {
      return a.source().order() == b.source().order()
             && a.target().symmetric_degree() == b.target().symmetric_degree()
             && a.images() == b.images();
    }
  }  // namespace detail

  /// (h, g) -> (h, f(g)) for a morphism f: (G1, sigma1) -> (G2, sigma2) of
  /// groups over S_n.
  inline GroupHom base_change_map(WreathGroup const& w1,
                                  WreathGroup const& w2,
                                  GroupHom const&    f) {
    if (w1.n != w2.n || !w1.H.same_as(w2.H)) {
      throw MismatchedBase("base_change_map: coefficient groups or degrees "
                           "differ");
    }
    if (f.source().order() != w1.G.order()
        || f.target().order() != w2.G.order()) {
      throw InvalidArgument("base_change_map: f must map G1 to G2");
    }
    for (Elem g = 0; g < w1.G.order(); ++g) {
      if (w2.sigma(f(g)) != w1.sigma(g)) {
        throw TriangleViolation("base_change_map: sigma2 o f differs from "
                                "sigma1 at element "
                                + std::to_string(g));
      }
    }
    Elem const        hn = w1.codec.base_size();
    std::vector<Elem> images(w1.group.order());
    for (Elem x = 0; x < w1.group.order(); ++x) {
      images[x] = f(x / hn) * hn + x % hn;
    }
    return GroupHom(w1.group, w2.group, std::move(images));
  }

  /// (h_1, ..., h_n, g) -> (phi(h_1), ..., phi(h_n), g).
  inline GroupHom coefficient_map(WreathGroup const& w1,
                                  WreathGroup const& w2,
                                  GroupHom const&    phi) {
    if (w1.n != w2.n || !w1.G.same_as(w2.G)
        || !detail::same_sigma(w1.sigma, w2.sigma)) {
      throw MismatchedBase("coefficient_map: base groups or sigma differ");
    }
    if (phi.source().order() != w1.H.order()
        || phi.target().order() != w2.H.order()) {
      throw InvalidArgument("coefficient_map: phi must map H1 to H2");
    }
    std::array<Elem, WreathCodec::max_degree> c{};
    Elem const        hn = w1.codec.base_size();
    std::vector<Elem> images(w1.group.order());
    for (Elem x = 0; x < w1.group.order(); ++x) {
      w1.codec.decode_coords(x % hn, c.data());
      for (int i = 0; i < w1.n; ++i) {
        c[i] = phi(c[i]);
      }
      images[x] = (x / hn) * w2.codec.base_size() + w2.codec.encode_coords(c.data());
    }
    return GroupHom(w1.group, w2.group, std::move(images));
  }

}  // namespace wreathlab

#endif  // WREATHLAB_WREATH_HPP_
