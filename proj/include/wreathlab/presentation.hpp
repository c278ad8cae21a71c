#ifndef WREATHLAB_PRESENTATION_HPP_
#define WREATHLAB_PRESENTATION_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "intmatrix.hpp"
#include "permutation.hpp"
#include "quotient.hpp"

namespace wreathlab {

  struct Letter {
    std::size_t gen = 0;
    int         exp = 1;  // +1 or -1

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  /// Cancels adjacent x x^-1 pairs.
  inline Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (Letter const& l : w) {
      if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  inline Word inverse_word(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) {
      l.exp = -l.exp;
    }
    return out;
  }

  inline Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (auto const& p : parts) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  /// Finitely presented group.  Relators are stored freely reduced; ones that
  /// reduce to the empty word are dropped.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators)
        : _generators(std::move(generators)) {
      for (std::size_t i = 0; i < _generators.size(); ++i) {
        auto const& name = _generators[i];
        if (name.empty()
            || std::none_of(name.begin(), name.end(),
                            [](unsigned char c) { return std::islower(c); })) {
          throw InvalidArgument("presentation: generator name '" + name
                                + "' needs a lower-case letter");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_generators[j] == name) {
            throw InvalidArgument("presentation: duplicate generator '" + name
                                  + "'");
          }
        }
      }
      for (auto const& r : relators) {
        add_relator(r);
      }
    }

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }

    std::size_t generator_index(std::string_view name) const {
      for (std::size_t i = 0; i < _generators.size(); ++i) {
        if (_generators[i] == name) {
          return i;
        }
      }
      throw InvalidArgument("presentation: unknown generator '"
                            + std::string(name) + "'");
    }

    void add_relator(Word const& w) {
      for (Letter const& l : w) {
        if (l.gen >= _generators.size() || (l.exp != 1 && l.exp != -1)) {
          throw InvalidArgument("presentation: malformed letter in relator");
        }
      }
      Word r = free_reduce(w);
      if (!r.empty()) {
        _relators.push_back(std::move(r));
      }
    }

    /// Word text in the file format: the generator name for x, the name in
    /// upper case for x^-1.
    std::string word_to_string(Word const& w) const {
      std::string s;
      for (Letter const& l : w) {
        std::string name = _generators[l.gen];
        if (l.exp < 0) {
          std::transform(name.begin(), name.end(), name.begin(),
                         [](unsigned char c) { return std::toupper(c); });
        }
        s += (s.empty() ? "" : " ") + name;
      }
      return s;
    }

    std::string to_text() const {
      std::string s = "gens:";
      for (auto const& g : _generators) {
        s += " " + g;
      }
      s += "\n";
      for (auto const& r : _relators) {
        s += "rel: " + word_to_string(r) + "\n";
      }
      return s;
    }

   private:
    std::vector<std::string> _generators;
    std::vector<Word>        _relators;
  };

  namespace detail {
    inline std::string upper(std::string s) {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return std::toupper(c); });
      return s;
    }
  }  // namespace detail

  /// Parses the text format:
  ///
  ///     gens: a b c
  ///     rel: a b A B
  ///     rel: c^3
  ///
  /// Upper case denotes the inverse; `x^k` repeats a letter (k may be
  /// negative).  Blank lines and lines starting with '#' are skipped.
  /// ParseError positions are byte offsets into the text.
  inline Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> gens;
    std::vector<std::string> rel_lines;
    std::vector<std::size_t> rel_offsets;
    bool                     have_gens = false;
    std::size_t              offset    = 0;
    while (offset <= text.size()) {
      std::size_t end = text.find('\n', offset);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(offset, end - offset);
      std::size_t      lead = line.find_first_not_of(" \t\r");
      if (lead != std::string_view::npos && line[lead] != '#') {
        std::string_view body = line.substr(lead);
        if (body.starts_with("gens:")) {
          if (have_gens) {
            throw ParseError("duplicate 'gens:' line", offset + lead);
          }
          have_gens = true;
          std::istringstream in{std::string(body.substr(5))};
          std::string        tok;
          while (in >> tok) {
            gens.push_back(tok);
          }
        } else if (body.starts_with("rel:")) {
          rel_lines.emplace_back(body.substr(4));
          rel_offsets.push_back(offset + lead + 4);
        } else {
          throw ParseError("expected 'gens:' or 'rel:'", offset + lead);
        }
      }
      offset = end + 1;
    }
    if (!have_gens) {
      throw ParseError("missing 'gens:' line", 0);
    }

    std::vector<Word> relators;
    for (std::size_t r = 0; r < rel_lines.size(); ++r) {
      std::string const& line = rel_lines[r];
      Word               w;
      std::size_t        pos = 0;
      while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
          ++pos;
          continue;
        }
        std::size_t const start = pos;
        while (pos < line.size()
               && !std::isspace(static_cast<unsigned char>(line[pos]))) {
          ++pos;
        }
        std::string tok   = line.substr(start, pos - start);
        long        power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
          std::string digits = tok.substr(caret + 1);
          tok                = tok.substr(0, caret);
          try {
            std::size_t used = 0;
            power            = std::stol(digits, &used);
            if (used != digits.size()) {
              throw std::invalid_argument(digits);
            }
          } catch (std::exception const&) {
            throw ParseError("bad exponent '" + digits + "'",
                             rel_offsets[r] + start + caret + 1);
          }
        }
        std::optional<Letter> letter;
        for (std::size_t g = 0; g < gens.size() && !letter; ++g) {
          if (tok == gens[g]) {
            letter = Letter{g, 1};
          } else if (tok == detail::upper(gens[g])) {
            letter = Letter{g, -1};
          }
        }
        if (!letter) {
          throw ParseError("unknown generator '" + tok + "'",
                           rel_offsets[r] + start);
        }
        if (power < 0) {
          letter->exp = -letter->exp;
          power       = -power;
        }
        for (long k = 0; k < power; ++k) {
          w.push_back(*letter);
        }
      }
      relators.push_back(std::move(w));
    }
    try {
      return Presentation(std::move(gens), std::move(relators));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what(), 0);
    }
  }

  /// Exponent-sum matrix: one row per relator, one column per generator.
  inline IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(p.relators().size(), p.generators().size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      for (Letter const& l : p.relators()[i]) {
        m(i, l.gen) += l.exp;
      }
    }
    return m;
  }

  inline AbelianInvariants presentation_abelianization(Presentation const& p) {
    return cokernel_invariants(relation_matrix(p));
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid-type presentations
  ////////////////////////////////////////////////////////////////////////

  enum class BraidKind { braid, symmetric, virtual_braid, singular_braid };

  inline BraidKind braid_kind_from_string(std::string_view s) {
    if (s == "braid") {
      return BraidKind::braid;
    }
    if (s == "symmetric") {
      return BraidKind::symmetric;
    }
    if (s == "virtual_braid") {
      return BraidKind::virtual_braid;
    }
    if (s == "singular_braid") {
      return BraidKind::singular_braid;
    }
    throw UnsupportedKind("unsupported presentation kind '" + std::string(s)
                          + "'");
  }

  namespace detail {
    inline Word letter(std::size_t g, int e = 1) {
      return {Letter{g, e}};
    }
    inline Word commutator_word(std::size_t a, std::size_t b) {
      return {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
    }
    /// a b a = b a b as the relator a b a B A B.
    inline Word braid_word(std::size_t a, std::size_t b) {
      return {{a, 1}, {b, 1}, {a, 1}, {b, -1}, {a, -1}, {b, -1}};
    }
    /// lhs = rhs as the relator lhs rhs^-1.
    inline Word equation(Word const& lhs, Word const& rhs) {
      return concat({lhs, inverse_word(rhs)});
    }
  }  // namespace detail

  /// Standard presentations on n strands.
  ///
  /// - braid: Artin generators s1..s{n-1} with far commutation and the braid
  ///   relation.
  /// - symmetric: the braid relators plus si^2.
  /// - virtual_braid (Kauffman): s1.., v1..; braid relators on the s, the
  ///   symmetric-group relators on the v, far commutation si vj, and the
  ///   mixed relation vi s{i+1} vi = v{i+1} si v{i+1}.
  /// - singular_braid (Birman, as used by Fenn-Keyman-Rourke for the group
  ///   SG_n): s1.., a1..; braid relators on the s, far commutation among
  ///   all generators, [si, ai], si s{i+1} ai = a{i+1} si s{i+1} and
  ///   s{i+1} si a{i+1} = ai s{i+1} si.
  inline Presentation braid_type_presentation(BraidKind kind, int n) {
    if (n < 2) {
      throw InvalidArgument("braid_type_presentation: n must be at least 2");
    }
    using detail::braid_word;
    using detail::commutator_word;
    using detail::equation;
    using detail::letter;
    std::size_t const        m = static_cast<std::size_t>(n - 1);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) {
      names.push_back("s" + std::to_string(i));
    }
    auto s = [](std::size_t i) { return i; };
    auto o = [m](std::size_t i) { return m + i; };  // v or a generators
    if (kind == BraidKind::virtual_braid || kind == BraidKind::singular_braid) {
      char const prefix = kind == BraidKind::virtual_braid ? 'v' : 'a';
      for (std::size_t i = 1; i <= m; ++i) {
        names.push_back(prefix + std::to_string(i));
      }
    }

    std::vector<Word> rels;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 2; j < m; ++j) {
        rels.push_back(commutator_word(s(i), s(j)));
      }
      if (i + 1 < m) {
        rels.push_back(braid_word(s(i), s(i + 1)));
      }
    }
    switch (kind) {
      case BraidKind::braid:
        break;
      case BraidKind::symmetric:
        for (std::size_t i = 0; i < m; ++i) {
          rels.push_back({{s(i), 1}, {s(i), 1}});
        }
        break;
      case BraidKind::virtual_braid:
        for (std::size_t i = 0; i < m; ++i) {
          rels.push_back({{o(i), 1}, {o(i), 1}});
          for (std::size_t j = i + 2; j < m; ++j) {
            rels.push_back(commutator_word(o(i), o(j)));
          }
          if (i + 1 < m) {
            rels.push_back(braid_word(o(i), o(i + 1)));
          }
        }
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (i + 2 <= j || j + 2 <= i) {
              rels.push_back(commutator_word(s(i), o(j)));
            }
          }
          if (i + 1 < m) {
            rels.push_back(equation(
                concat({letter(o(i)), letter(s(i + 1)), letter(o(i))}),
                concat({letter(o(i + 1)), letter(s(i)), letter(o(i + 1))})));
          }
        }
        break;
      case BraidKind::singular_braid:
        for (std::size_t i = 0; i < m; ++i) {
          rels.push_back(commutator_word(s(i), o(i)));
          for (std::size_t j = 0; j < m; ++j) {
            if (i + 2 <= j || j + 2 <= i) {
              rels.push_back(commutator_word(s(i), o(j)));
              if (i < j) {
                rels.push_back(commutator_word(o(i), o(j)));
              }
            }
          }
          if (i + 1 < m) {
            rels.push_back(equation(
                concat({letter(s(i)), letter(s(i + 1)), letter(o(i))}),
                concat({letter(o(i + 1)), letter(s(i)), letter(s(i + 1))})));
            rels.push_back(equation(
                concat({letter(s(i + 1)), letter(s(i)), letter(o(i + 1))}),
                concat({letter(o(i)), letter(s(i + 1)), letter(s(i))})));
          }
        }
        break;
    }
    return Presentation(std::move(names), std::move(rels));
  }

  inline Presentation braid_type_presentation(std::string_view kind, int n) {
    return braid_type_presentation(braid_kind_from_string(kind), n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Framing
  ////////////////////////////////////////////////////////////////////////

  /// Every generator whose name ends in the index i is sent to the
  /// transposition (i, i+1) of {1..n} (0-based: (i-1, i)).  This is the
  /// strand permutation of s_i, and of v_i and a_i in the virtual and
  /// singular presentations.
  inline std::vector<perm::Permutation> strand_permutations(Presentation const& p,
                                                            int n) {
    std::vector<perm::Permutation> out;
    for (auto const& name : p.generators()) {
      std::size_t k = name.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) {
        --k;
      }
      if (k == name.size()) {
        throw InvalidArgument("strand_permutations: generator '" + name
                              + "' carries no strand index");
      }
      int const i = std::stoi(name.substr(k));
      if (i < 1 || i >= n) {
        throw InvalidArgument("strand_permutations: generator '" + name
                              + "' has no transposition in S"
                              + std::to_string(n));
      }
      out.push_back(perm::transposition(n, i - 1, i));
    }
    return out;
  }

  /// Permutation of {0..n-1} that word w acts by, when generator g acts by
  /// perms[g] and a word acts by composing left to right as functions
  /// (x1 x2 acts as perms[x1] after perms[x2]).
  inline perm::Permutation evaluate_word(Word const&                           w,
                                         std::vector<perm::Permutation> const& perms,
                                         int                                   n) {
    perm::Permutation acc = perm::identity(n);
    for (Letter const& l : w) {
      perm::Permutation const& p = perms[l.gen];
      acc = perm::compose(acc, l.exp > 0 ? p : perm::inverse(p));
    }
    return acc;
  }

  /// Presentation of Z^n semidirect <P>: adds t1..tn with [ti, tj] = 1 and
  /// g tj g^-1 = t_{perm(g)(j)} for every generator g.  A word acts through
  /// evaluate_word, so every relator of P has to evaluate to the identity.
  inline Presentation frame_presentation(Presentation const&                   p,
                                         int                                   n,
                                         std::vector<perm::Permutation> const& perms) {
    if (n < 1) {
      throw InvalidArgument("frame_presentation: n must be positive");
    }
    if (perms.size() != p.generators().size()) {
      throw InvalidArgument("frame_presentation: need one permutation per "
                            "generator");
    }
    for (auto const& q : perms) {
      if (static_cast<int>(q.size()) != n || !perm::is_valid(q)) {
        throw InvalidArgument("frame_presentation: invalid permutation of "
                              "degree "
                              + std::to_string(n));
      }
    }
    for (auto const& r : p.relators()) {
      if (!perm::is_identity(evaluate_word(r, perms, n))) {
        throw PermutationInconsistent("frame_presentation: relator '"
                                      + p.word_to_string(r)
                                      + "' does not act trivially");
      }
    }
    std::vector<std::string> names = p.generators();
    std::size_t const        base  = names.size();
    for (int j = 1; j <= n; ++j) {
      std::string name = "t" + std::to_string(j);
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw InvalidArgument("frame_presentation: generator name '" + name
                              + "' is already taken");
      }
      names.push_back(std::move(name));
    }
    std::vector<Word> rels = p.relators();
    auto t = [base](int j) { return base + static_cast<std::size_t>(j); };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        rels.push_back(detail::commutator_word(t(i), t(j)));
      }
    }
    for (std::size_t g = 0; g < base; ++g) {
      for (int j = 0; j < n; ++j) {
        rels.push_back({{g, 1}, {t(j), 1}, {g, -1}, {t(perms[g][j]), -1}});
      }
    }
    return Presentation(std::move(names), std::move(rels));
  }

  /// Adds x^m for each named generator x (used to replace Z by C_m in a
  /// framing).
  inline Presentation with_power_relators(Presentation const&             p,
                                          std::vector<std::string> const& names,
                                          int                             m) {
    if (m < 1) {
      throw InvalidArgument("with_power_relators: exponent must be positive");
    }
    Presentation out = p;
    for (auto const& name : names) {
      out.add_relator(Word(static_cast<std::size_t>(m),
                           Letter{p.generator_index(name), 1}));
    }
    return out;
  }

  inline std::vector<std::string> framing_generators(int n) {
    std::vector<std::string> out;
    for (int j = 1; j <= n; ++j) {
      out.push_back("t" + std::to_string(j));
    }
    return out;
  }

  /// A presentation together with the strand count it was built for.
  struct StrandedPresentation {
    Presentation presentation;
    int          strands = 0;
  };

  namespace detail {
    inline StrandedPresentation parse_presentation_spec(std::string_view text,
                                                        std::size_t&     pos);

    inline void spec_space(std::string_view text, std::size_t& pos) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    }

    inline void spec_expect(std::string_view text, std::size_t& pos, char c) {
      spec_space(text, pos);
      if (pos >= text.size() || text[pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", pos);
      }
      ++pos;
    }

    inline int spec_int(std::string_view text, std::size_t& pos) {
      spec_space(text, pos);
      std::size_t const start = pos;
      while (pos < text.size() && pos - start < 9
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        throw ParseError("expected an integer", pos);
      }
      return std::stoi(std::string(text.substr(start, pos - start)));
    }

    inline StrandedPresentation parse_presentation_spec(std::string_view text,
                                                        std::size_t&     pos) {
      spec_space(text, pos);
      std::size_t const start = pos;
      while (pos < text.size()
             && (std::isalpha(static_cast<unsigned char>(text[pos]))
                 || text[pos] == '_')) {
        ++pos;
      }
      std::string const name(text.substr(start, pos - start));
      if (name.empty()) {
        throw ParseError("expected a presentation builder", start);
      }
      spec_expect(text, pos, '(');
      if (name == "frame") {
        StrandedPresentation inner = parse_presentation_spec(text, pos);
        std::optional<int>   power;
        spec_space(text, pos);
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          power = spec_int(text, pos);
        }
        spec_expect(text, pos, ')');
        int const    n = inner.strands;
        Presentation framed
            = frame_presentation(inner.presentation, n,
                                 strand_permutations(inner.presentation, n));
        if (power) {
          framed = with_power_relators(framed, framing_generators(n), *power);
        }
        return {std::move(framed), n};
      }
      BraidKind kind{};
      try {
        kind = braid_kind_from_string(name);
      } catch (UnsupportedKind const&) {
        throw ParseError("unknown presentation builder '" + name + "'", start);
      }
      int const n = spec_int(text, pos);
      spec_expect(text, pos, ')');
      return {braid_type_presentation(kind, n), n};
    }
  }  // namespace detail

  /// Builder specs: `braid(n)`, `symmetric(n)`, `virtual_braid(n)`,
  /// `singular_braid(n)`, `frame(spec)` (strand permutations of degree n)
  /// and `frame(spec, m)` (additionally tj^m = 1).
  inline StrandedPresentation parse_presentation_spec(std::string_view text) {
    std::size_t pos = 0;
    auto        out = detail::parse_presentation_spec(text, pos);
    detail::spec_space(text, pos);
    if (pos != text.size()) {
      throw ParseError("trailing characters", pos);
    }
    return out;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_PRESENTATION_HPP_
