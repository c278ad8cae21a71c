#ifndef WREATHLAB_EXPR_HPP_
#define WREATHLAB_EXPR_HPP_

#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "builders.hpp"
#include "error.hpp"
#include "hom.hpp"
#include "permutation.hpp"
#include "quotient.hpp"
#include "wreath.hpp"

namespace wreathlab {

  /// sigma-spec forms: `id` (G is some S_n), `projK` (projection of a direct
  /// product onto its K-th factor, 1-based, which must be some S_n), `trivN`
  /// (trivial map to S_N), `file:<path>` (generator images read from JSON).
  struct SigmaSpec {
    enum class Kind { identity, projection, trivial, file };
    Kind        kind  = Kind::identity;
    int         index = 0;  // K for projK, N for trivN
    std::string path;

    std::string to_string() const {
      switch (kind) {
        case Kind::identity:
          return "id";
        case Kind::projection:
          return "proj" + std::to_string(index);
        case Kind::trivial:
          return "triv" + std::to_string(index);
        case Kind::file:
          return "file:" + path;
      }
      return "?";
    }
  };

  /// Parsed group expression; built on demand by build_group.
  struct GroupPlan {
    enum class Kind { cyclic, symmetric, product, power, wreath };
    Kind                   kind  = Kind::cyclic;
    int                    param = 0;  // order of C, degree of S, exponent
    std::vector<GroupPlan> children;
    SigmaSpec              sigma;  // wreath only

    std::string to_string() const {
      switch (kind) {
        case Kind::cyclic:
          return "C" + std::to_string(param);
        case Kind::symmetric:
          return "S" + std::to_string(param);
        case Kind::product: {
          std::string s;
          for (std::size_t i = 0; i < children.size(); ++i) {
            auto const& c = children[i];
            std::string t = c.to_string();
            s += (i ? "*" : "") + (c.kind == Kind::product ? "(" + t + ")" : t);
          }
          return s;
        }
        case Kind::power: {
          auto const& c = children.front();
          std::string t = c.to_string();
          bool parens = c.kind == Kind::product || c.kind == Kind::power;
          return (parens ? "(" + t + ")" : t) + "^" + std::to_string(param);
        }
        case Kind::wreath:
          return "wreath(" + children[0].to_string() + ", "
                 + children[1].to_string() + ", " + sigma.to_string() + ")";
      }
      return "?";
    }
  };

  namespace detail {

    class ExprParser {
     public:
      explicit ExprParser(std::string_view text) : _text(text) {}

      GroupPlan parse_all() {
        GroupPlan p = expr();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return p;
      }

      SigmaSpec sigma_all() {
        SigmaSpec s = sigma(false);
        skip_space();
        if (_pos != _text.size()) {
          fail("trailing characters after sigma-spec");
        }
        return s;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, _pos);
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      int integer() {
        skip_space();
        std::size_t const start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        if (_pos - start > 9) {
          _pos = start;
          fail("integer too large");
        }
        return std::stoi(std::string(_text.substr(start, _pos - start)));
      }

      bool keyword(std::string_view word) {
        skip_space();
        if (_text.substr(_pos).starts_with(word)) {
          _pos += word.size();
          return true;
        }
        return false;
      }

      GroupPlan expr() {
        GroupPlan first = term();
        if (!peek('*')) {
          return first;
        }
        GroupPlan prod;
        prod.kind = GroupPlan::Kind::product;
        prod.children.push_back(std::move(first));
        while (accept('*')) {
          prod.children.push_back(term());
        }
        return prod;
      }

      bool peek(char c) {
        skip_space();
        return _pos < _text.size() && _text[_pos] == c;
      }

      GroupPlan term() {
        GroupPlan p = primary();
        while (accept('^')) {
          std::size_t const at = _pos;
          int               k  = integer();
          if (k < 1) {
            _pos = at;
            fail("exponent must be at least 1");
          }
          GroupPlan pw;
          pw.kind  = GroupPlan::Kind::power;
          pw.param = k;
          pw.children.push_back(std::move(p));
          p = std::move(pw);
        }
        return p;
      }

      GroupPlan primary() {
        skip_space();
        if (accept('(')) {
          GroupPlan p = expr();
          expect(')');
          return p;
        }
        if (keyword("wreath")) {
          expect('(');
          GroupPlan w;
          w.kind = GroupPlan::Kind::wreath;
          w.children.push_back(expr());
          expect(',');
          w.children.push_back(expr());
          expect(',');
          w.sigma = sigma(true);
          expect(')');
          return w;
        }
        if (_pos < _text.size() && (_text[_pos] == 'C' || _text[_pos] == 'S')) {
          GroupPlan p;
          p.kind = _text[_pos] == 'C' ? GroupPlan::Kind::cyclic
                                      : GroupPlan::Kind::symmetric;
          ++_pos;
          std::size_t const at = _pos;
          p.param              = integer();
          if (p.param < 1) {
            _pos = at;
            fail("order or degree must be at least 1");
          }
          return p;
        }
        fail("expected C<m>, S<n>, wreath(...) or '('");
      }

      SigmaSpec sigma(bool nested) {
        skip_space();
        SigmaSpec s;
        if (keyword("id")) {
          s.kind = SigmaSpec::Kind::identity;
        } else if (keyword("proj")) {
          s.kind  = SigmaSpec::Kind::projection;
          s.index = integer();
        } else if (keyword("triv")) {
          s.kind  = SigmaSpec::Kind::trivial;
          s.index = integer();
        } else if (keyword("file:")) {
          s.kind                = SigmaSpec::Kind::file;
          std::size_t const end = nested ? _text.find(')', _pos) : _text.size();
          if (end == std::string_view::npos) {
            fail("unterminated file path");
          }
          std::string path(_text.substr(_pos, end - _pos));
          while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) {
            path.pop_back();
          }
          if (path.empty()) {
            fail("empty file path");
          }
          s.path = std::move(path);
          _pos   = end;
        } else {
          fail("expected sigma-spec id, projK, trivN or file:<path>");
        }
        return s;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  /// Grammar:
  ///
  ///     expr    := term ('*' term)*
  ///     term    := primary ('^' int)*
  ///     primary := C<int> | S<int> | wreath(expr, expr, sigma) | (expr)
  ///
  /// A chain a*b*c is one direct product with three factors, so projK counts
  /// factors left to right.
  inline GroupPlan parse_group_expr(std::string_view text) {
    return detail::ExprParser(text).parse_all();
  }

  inline SigmaSpec parse_sigma_spec(std::string_view text) {
    return detail::ExprParser(text).sigma_all();
  }

  namespace detail {
    inline std::optional<int> symmetric_degree_of(GroupPlan const& p) {
      if (p.kind == GroupPlan::Kind::symmetric) {
        return p.param;
      }
      return std::nullopt;
    }

    inline nlohmann::json read_json_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ConfigError("cannot open '" + path + "'");
      }
      try {
        return nlohmann::json::parse(in);
      } catch (nlohmann::json::exception const& e) {
        throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
      }
    }

    /// Degree n that sigma maps into, without building anything.
    inline int sigma_degree(SigmaSpec const& s, GroupPlan const& g) {
      switch (s.kind) {
        case SigmaSpec::Kind::identity:
          if (auto d = symmetric_degree_of(g)) {
            return *d;
          }
          throw InvalidArgument("sigma 'id' needs G = S<n>, got "
                                + g.to_string());
        case SigmaSpec::Kind::projection: {
          if (g.kind != GroupPlan::Kind::product || s.index < 1
              || static_cast<std::size_t>(s.index) > g.children.size()) {
            throw InvalidArgument("sigma '" + s.to_string()
                                  + "' needs a direct product with at least "
                                  + std::to_string(s.index) + " factors");
          }
          if (auto d = symmetric_degree_of(g.children[s.index - 1])) {
            return *d;
          }
          throw InvalidArgument("sigma '" + s.to_string()
                                + "' needs factor " + std::to_string(s.index)
                                + " to be S<n>");
        }
        case SigmaSpec::Kind::trivial:
          return s.index;
        case SigmaSpec::Kind::file: {
          auto j = read_json_file(s.path);
          if (!j.contains("n") || !j["n"].is_number_integer()) {
            throw ConfigError("'" + s.path + "' lacks an integer field 'n'");
          }
          return j["n"].get<int>();
        }
      }
      return 0;
    }
  }  // namespace detail

  /// Order of the group an expression describes, computed without building
  /// it.
  inline BigInt plan_order(GroupPlan const& p) {
    switch (p.kind) {
      case GroupPlan::Kind::cyclic:
        return p.param;
      case GroupPlan::Kind::symmetric: {
        BigInt r = 1;
        for (int i = 2; i <= p.param; ++i) {
          r *= i;
        }
        return r;
      }
      case GroupPlan::Kind::product: {
        BigInt r = 1;
        for (auto const& c : p.children) {
          r *= plan_order(c);
        }
        return r;
      }
      case GroupPlan::Kind::power:
        return boost::multiprecision::pow(plan_order(p.children.front()),
                                          static_cast<unsigned>(p.param));
      case GroupPlan::Kind::wreath: {
        int const n = detail::sigma_degree(p.sigma, p.children[1]);
        return boost::multiprecision::pow(plan_order(p.children[0]),
                                          static_cast<unsigned>(n))
               * plan_order(p.children[1]);
      }
    }
    return 0;
  }

  struct BuiltGroup {
    FiniteGroup                group;
    std::optional<WreathGroup> wreath;
  };

  /// sigma: G -> S_n for a G built from plan g.
  inline GroupHom resolve_sigma(SigmaSpec const&   s,
                                GroupPlan const&   gplan,
                                FiniteGroup const& g,
                                Limits const&      limits = {}) {
    int const         n  = detail::sigma_degree(s, gplan);
    FiniteGroup const sn = symmetric(n, limits);
    switch (s.kind) {
      case SigmaSpec::Kind::identity:
        return identity_hom(g);
      case SigmaSpec::Kind::projection: {
        std::vector<Elem> radices;
        for (auto const& c : gplan.children) {
          radices.push_back(static_cast<Elem>(plan_order(c)));
        }
        ProductCodec      codec(radices);
        std::vector<Elem> images(g.order());
        for (Elem x = 0; x < g.order(); ++x) {
          images[x] = codec.decode(x)[s.index - 1];
        }
        return GroupHom(g, sn, std::move(images));
      }
      case SigmaSpec::Kind::trivial:
        return trivial_hom(g, sn);
      case SigmaSpec::Kind::file: {
        auto j = detail::read_json_file(s.path);
        try {
          std::vector<Elem> gens;
          if (j.contains("generators")) {
            gens = j["generators"].get<std::vector<Elem>>();
          } else {
            gens.assign(g.generators().begin(), g.generators().end());
          }
          auto const        one_based = j.at("images").get<std::vector<std::vector<int>>>();
          std::vector<Elem> images;
          for (auto p : one_based) {
            for (int& v : p) {
              --v;
            }
            images.push_back(element_of(sn, p));
          }
          return hom_from_images(g, sn, gens, images);
        } catch (nlohmann::json::exception const& e) {
          throw ConfigError("'" + s.path + "': " + e.what());
        }
      }
    }
    throw InvalidArgument("unknown sigma-spec");
  }

  inline BuiltGroup build_group(GroupPlan const& p, Limits const& limits = {}) {
    if (plan_order(p) > limits.max_order) {
      throw OrderOverflow(p.to_string() + ": order " + plan_order(p).str()
                          + " exceeds the configured maximum "
                          + std::to_string(limits.max_order));
    }
    switch (p.kind) {
      case GroupPlan::Kind::cyclic:
        return {cyclic(static_cast<Elem>(p.param), limits), std::nullopt};
      case GroupPlan::Kind::symmetric:
        return {symmetric(p.param, limits), std::nullopt};
      case GroupPlan::Kind::product: {
        std::vector<FiniteGroup> factors;
        for (auto const& c : p.children) {
          factors.push_back(build_group(c, limits).group);
        }
        return {direct_product(factors, limits), std::nullopt};
      }
      case GroupPlan::Kind::power:
        return {direct_power(build_group(p.children.front(), limits).group,
                             p.param, limits),
                std::nullopt};
      case GroupPlan::Kind::wreath: {
        FiniteGroup const h     = build_group(p.children[0], limits).group;
        FiniteGroup const g     = build_group(p.children[1], limits).group;
        GroupHom const    sigma = resolve_sigma(p.sigma, p.children[1], g, limits);
        WreathGroup       w     = build_wreath_pullback(h, g, sigma, limits);
        FiniteGroup       grp   = w.group;
        return {std::move(grp), std::move(w)};
      }
    }
    throw InvalidArgument("unknown group plan");
  }

  inline BuiltGroup build_group(std::string_view text, Limits const& limits = {}) {
    return build_group(parse_group_expr(text), limits);
  }

  /// Wreath pullback H wr_sigma G from three expressions.
  inline WreathGroup build_wreath_from_exprs(std::string_view h,
                                             std::string_view g,
                                             std::string_view sigma,
                                             Limits const&    limits = {}) {
    GroupPlan plan;
    plan.kind = GroupPlan::Kind::wreath;
    plan.children.push_back(parse_group_expr(h));
    plan.children.push_back(parse_group_expr(g));
    plan.sigma = parse_sigma_spec(sigma);
    return *build_group(plan, limits).wreath;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_EXPR_HPP_
