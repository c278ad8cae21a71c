#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wreathlab/wreathlab.hpp"

using namespace wreathlab;
using nlohmann::json;

namespace {

  struct Options {
    Limits      limits;
    std::string json_path;
  };

  /// Writes j to the --json target ("-" is standard output) and a one-line
  /// summary to standard output otherwise.
  void emit(Options const& o, json const& j, std::string const& summary) {
    if (o.json_path == "-") {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << summary << "\n";
    if (!o.json_path.empty()) {
      std::ofstream f(o.json_path);
      if (!f) {
        throw ConfigError("cannot write '" + o.json_path + "'");
      }
      f << j.dump(2) << "\n";
    }
  }

  WreathGroup require_wreath(std::string const& expr, Limits const& limits) {
    auto built = build_group(expr, limits);
    if (!built.wreath) {
      throw ConfigError("'" + expr + "' is not a wreath(H, G, sigma) expression");
    }
    return std::move(*built.wreath);
  }

  int emit_report(Options const& o, TheoremReport const& r) {
    std::ostringstream s;
    s << r.theorem << ": " << to_string(r.verdict);
    for (auto const& h : r.hypotheses) {
      if (!h.met) {
        s << " [unmet: " << h.name << "]";
      }
    }
    if (r.witness) {
      s << " witness=" << *r.witness;
    }
    emit(o, r.to_json(), s.str());
    return r.is_violation() ? 1 : 0;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  /// A builder spec when it parses as one, otherwise a presentation file.
  StrandedPresentation load_presentation(std::string const& source) {
    if (source.find('(') != std::string::npos) {
      return parse_presentation_spec(source);
    }
    return {parse_presentation(read_file(source)), 0};
  }

  GroupHom resolve_endo(FiniteGroup const& g, std::string const& spec,
                        Limits const& limits) {
    if (spec == "id") {
      return identity_hom(g);
    }
    if (spec == "inv") {
      std::vector<Elem> images(g.order());
      for (Elem x = 0; x < g.order(); ++x) {
        images[x] = g.inv(x);
      }
      return GroupHom(g, g, std::move(images));
    }
    auto index_after = [&](std::string const& prefix) {
      try {
        return static_cast<std::size_t>(std::stoul(spec.substr(prefix.size())));
      } catch (std::exception const&) {
        throw ConfigError("bad endomorphism spec '" + spec + "'");
      }
    };
    if (spec.starts_with("inner:")) {
      std::size_t const a = index_after("inner:");
      if (a >= g.order()) {
        throw ConfigError("inner: element index out of range");
      }
      return inner_automorphism(g, static_cast<Elem>(a));
    }
    if (spec.starts_with("aut:")) {
      std::size_t const i    = index_after("aut:");
      auto const        auts = automorphisms(g, limits);
      if (i >= auts.size()) {
        throw ConfigError("aut: index out of range (" + std::to_string(auts.size())
                          + " automorphisms)");
      }
      return auts[i];
    }
    if (spec.starts_with("file:")) {
      json j = json::parse(read_file(spec.substr(5)));
      auto images = j.at("images").get<std::vector<Elem>>();
      if (j.contains("generators")) {
        return hom_from_images(g, g, j["generators"].get<std::vector<Elem>>(),
                               images);
      }
      if (images.size() != g.order()) {
        throw ConfigError("endomorphism file: expected " + std::to_string(g.order())
                          + " images");
      }
      for (Elem v : images) {
        if (v >= g.order()) {
          throw ConfigError("endomorphism file: image out of range");
        }
      }
      return GroupHom(g, g, std::move(images));
    }
    throw ConfigError("unknown endomorphism spec '" + spec
                      + "' (use id, inv, inner:<k>, aut:<i> or file:<path>)");
  }

  json group_summary(FiniteGroup const& g) {
    return {{"label", g.label()},
            {"order", g.order()},
            {"generators", std::vector<Elem>(g.generators().begin(),
                                             g.generators().end())},
            {"abelian", g.is_abelian()}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite permutational wreath pullbacks: construction and "
               "structure checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  if (char const* env = std::getenv("WREATHLAB_MAX_ORDER")) {
    try {
      o.limits.max_order = std::stoull(env);
    } catch (std::exception const&) {
      std::cerr << "error: WREATHLAB_MAX_ORDER must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--max-order", o.limits.max_order, "Largest group order to build");
  app.add_option("--max-aut", o.limits.max_aut_order,
                 "Largest group order for automorphism enumeration");
  app.add_option("--json", o.json_path, "Write the JSON result here ('-' for stdout)");

  std::string expr;
  auto*       build = app.add_subcommand("build", "Build a group expression");
  build->add_option("expr", expr, "Group expression")->required();
  bool with_table = false;
  build->add_flag("--table", with_table, "Include the multiplication table");

  auto* center_cmd = app.add_subcommand("center", "Center of a group");
  center_cmd->add_option("expr", expr)->required();
  bool formula = false;
  center_cmd->add_flag("--formula", formula,
                       "Check the wreath center formula instead");

  auto* ab_cmd = app.add_subcommand("ab", "Abelianization invariants");
  ab_cmd->add_option("expr", expr)->required();
  ab_cmd->add_flag("--formula", formula,
                   "Check the wreath abelianization formula instead");

  auto* radical_cmd = app.add_subcommand("radical", "Abelian normal radical A(X)");
  radical_cmd->add_option("expr", expr)->required();

  auto* star_cmd = app.add_subcommand("star", "Condition (*) on a wreath expression");
  star_cmd->add_option("expr", expr)->required();
  auto* dstar_cmd
      = app.add_subcommand("dstar", "Condition (**) on a wreath expression");
  dstar_cmd->add_option("expr", expr)->required();
  auto* star_equiv_cmd
      = app.add_subcommand("star-equiv", "Compare (*) and (**) independently");
  star_equiv_cmd->add_option("expr", expr)->required();
  auto* split_cmd
      = app.add_subcommand("split", "Certify the pure subgroup splitting");
  split_cmd->add_option("expr", expr)->required();
  auto* pullback_cmd = app.add_subcommand(
      "pullback-check", "Validate the isomorphism onto the fiber product");
  pullback_cmd->add_option("expr", expr)->required();

  auto*       reid_cmd = app.add_subcommand("reid", "Reidemeister classes");
  std::string endo     = "id";
  reid_cmd->add_option("expr", expr)->required();
  reid_cmd->add_option("--endo", endo, "id | inv | inner:<k> | aut:<i> | file:<path>");

  auto* aut_cmd = app.add_subcommand("aut", "Enumerate automorphisms");
  aut_cmd->add_option("expr", expr)->required();
  bool count_only = false;
  aut_cmd->add_flag("--count-only", count_only);

  std::string source;
  auto*       present_cmd = app.add_subcommand(
      "present-ab", "Abelianization of a presentation file or builder spec");
  present_cmd->add_option("source", source)->required();

  auto* frame_cmd = app.add_subcommand("frame", "Frame a presentation");
  frame_cmd->add_option("source", source)->required();
  int strands = 0;
  int power   = 0;
  frame_cmd->add_option("--n", strands, "Number of strands (builder specs set it)");
  frame_cmd->add_option("--power", power, "Add tj^power relators");

  auto* sigma_cmd = app.add_subcommand(
      "explore-sigma", "Fingerprints of H wr_sigma G over every surjection sigma: G -> Sn");
  std::string h_expr;
  int         degree = 0;
  sigma_cmd->add_option("H", h_expr)->required();
  sigma_cmd->add_option("G", expr)->required();
  sigma_cmd->add_option("n", degree)->required();

  auto* explore_cmd = app.add_subcommand(
      "explore-n4", "(*) versus (**) below the proven degree: H in {C2, C3}, G = S4");

  auto*       suite_cmd = app.add_subcommand("suite", "Run a theorem suite");
  std::string config_path;
  std::string output_dir;
  unsigned    workers = 0;
  suite_cmd->add_option("config", config_path)->required();
  suite_cmd->add_option("--output-dir", output_dir, "Overrides output_dir");
  suite_cmd->add_option("--workers", workers, "Overrides workers");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits const& lim = o.limits;
    if (*build) {
      auto built = build_group(expr, lim);
      json j     = group_summary(built.group);
      if (with_table) {
        j = group_to_json(built.group);
      }
      if (built.wreath) {
        j["n"]                = built.wreath->n;
        j["sigma_surjective"] = built.wreath->sigma_surjective();
      }
      emit(o, j, built.group.label() + " order " + std::to_string(built.group.order()));
    } else if (*center_cmd) {
      if (formula) {
        return emit_report(o, verify_center_formula(require_wreath(expr, lim)));
      }
      auto           g = build_group(expr, lim).group;
      Subgroup const z = center(g);
      emit(o, to_json(z), "|Z| = " + std::to_string(z.size()));
    } else if (*ab_cmd) {
      if (formula) {
        return emit_report(o, verify_abelianization(require_wreath(expr, lim), lim));
      }
      auto const inv = abelianization(build_group(expr, lim).group, lim);
      emit(o, to_json(inv), inv.to_string());
    } else if (*radical_cmd) {
      auto           g = build_group(expr, lim).group;
      Subgroup const a = abelian_normal_radical(g);
      json           j = to_json(a);
      j["abelian"]     = is_abelian(a);
      emit(o, j,
           "|A| = " + std::to_string(a.size())
               + (is_abelian(a) ? " (abelian)" : " (non-abelian)"));
    } else if (*star_cmd || *dstar_cmd) {
      auto const w = require_wreath(expr, lim);
      auto const c = *star_cmd ? check_condition_star(w)
                               : check_condition_double_star(w.G, w.sigma);
      json j = {{"condition", *star_cmd ? "star" : "double-star"}, {"holds", c.holds}};
      std::string s = std::string(*star_cmd ? "(*)" : "(**)")
                      + (c.holds ? " holds" : " fails");
      if (c.witness_element) {
        j["witness"] = *c.witness_element;
        s += " witness=" + std::to_string(*c.witness_element);
      }
      emit(o, j, s);
    } else if (*star_equiv_cmd) {
      return emit_report(o, verify_star_equivalence(require_wreath(expr, lim)));
    } else if (*split_cmd) {
      return emit_report(o, pure_subgroup_split(require_wreath(expr, lim)));
    } else if (*pullback_cmd) {
      return emit_report(o, pullback_report(require_wreath(expr, lim), lim));
    } else if (*reid_cmd) {
      auto       g   = build_group(expr, lim).group;
      auto const phi = resolve_endo(g, endo, lim);
      auto const p   = reidemeister_number(g, phi);
      json       j   = {{"count", p.count()}};
      if (g.order() <= 64) {
        j["classes"] = p.blocks;
      }
      emit(o, j, "R = " + std::to_string(p.count()));
    } else if (*aut_cmd) {
      auto       g    = build_group(expr, lim).group;
      auto const auts = automorphisms(g, lim);
      json       j    = {{"count", auts.size()}};
      if (!count_only) {
        auto const gens = greedy_generating_set(g);
        json       list = json::array();
        for (auto const& a : auts) {
          std::vector<Elem> im;
          for (Elem s : gens) {
            im.push_back(a(s));
          }
          list.push_back(im);
        }
        j["generators"] = gens;
        j["images"]     = std::move(list);
      }
      emit(o, j, "|Aut| = " + std::to_string(auts.size()));
    } else if (*present_cmd) {
      auto const inv = presentation_abelianization(load_presentation(source).presentation);
      emit(o, to_json(inv), inv.to_string());
    } else if (*frame_cmd) {
      auto p = load_presentation(source);
      int  n = strands > 0 ? strands : p.strands;
      if (n < 1) {
        throw ConfigError("frame: --n is required for presentation files");
      }
      Presentation framed
          = frame_presentation(p.presentation, n, strand_permutations(p.presentation, n));
      if (power > 0) {
        framed = with_power_relators(framed, framing_generators(n), power);
      }
      if (o.json_path == "-" || !o.json_path.empty()) {
        json rels = json::array();
        for (auto const& r : framed.relators()) {
          rels.push_back(framed.word_to_string(r));
        }
        emit(o, {{"generators", framed.generators()}, {"relators", rels}},
             framed.to_text());
      } else {
        std::cout << framed.to_text();
      }
    } else if (*sigma_cmd) {
      FiniteGroup const h  = build_group(h_expr, lim).group;
      FiniteGroup const g  = build_group(expr, lim).group;
      FiniteGroup const sn = symmetric(degree, lim);
      auto const        sigmas = homomorphisms(g, sn, true);
      std::map<std::string, std::vector<std::size_t>> classes;
      json rows = json::array();
      for (std::size_t i = 0; i < sigmas.size(); ++i) {
        WreathGroup const w  = build_wreath_pullback(h, g, sigmas[i], lim);
        json              fp = rigidity_fingerprint(w, lim).to_json();
        fp["class_count"]    = conjugacy_classes(w.group).size();
        fp["abelianization"] = to_json(abelianization(w.group, lim));
        fp["center_order"]   = center(w.group).size();
        classes[fp.dump()].push_back(i);
        rows.push_back({{"sigma_images", sigmas[i].images()}, {"fingerprint", fp}});
      }
      std::cout << sigmas.size() << " surjections, " << classes.size()
                << " distinct fingerprints\n";
      if (!o.json_path.empty()) {
        json out = {{"surjections", rows}, {"distinct_fingerprints", classes.size()}};
        if (o.json_path == "-") {
          std::cout << out.dump(2) << "\n";
        } else {
          std::ofstream(o.json_path) << out.dump(2) << "\n";
        }
      }
    } else if (*explore_cmd) {
      json rows = json::array();
      for (char const* h : {"C2", "C3"}) {
        auto const    w = build_wreath_from_exprs(h, "S4", "id", lim);
        TheoremReport r = verify_star_equivalence(w);
        std::cout << "wreath(" << h << ", S4, id): (*) "
                  << (r.lhs["holds"].get<bool>() ? "holds" : "fails") << ", (**) "
                  << (r.rhs["holds"].get<bool>() ? "holds" : "fails") << ", "
                  << to_string(r.verdict) << "\n";
        rows.push_back({{"H", h}, {"report", r.to_json()}});
      }
      if (!o.json_path.empty() && o.json_path != "-") {
        std::ofstream(o.json_path) << rows.dump(2) << "\n";
      } else if (o.json_path == "-") {
        std::cout << rows.dump(2) << "\n";
      }
    } else if (*suite_cmd) {
      SuiteConfig config = load_suite_config(config_path, o.limits);
      if (!output_dir.empty()) {
        config.output_dir = output_dir;
      }
      if (workers > 0) {
        config.workers = workers;
      }
      auto const result = run_suite(config, &std::cout);
      if (!o.json_path.empty() && o.json_path != "-") {
        std::ofstream(o.json_path) << result.summary().dump(2) << "\n";
      }
      std::cout << (result.exit_code == 0 ? "suite: no violations\n"
                                          : "suite: violations found\n");
      return result.exit_code;
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (ConfigError const& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (json::exception const& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
