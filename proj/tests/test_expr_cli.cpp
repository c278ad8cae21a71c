#include "catch_amalgamated.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace wreathlab;
namespace fs = std::filesystem;

namespace {
  std::size_t parse_error_at(std::string_view text) {
    try {
      parse_group_expr(text);
    } catch (ParseError const& e) {
      return e.position();
    }
    return std::string_view::npos;
  }

  fs::path scratch_dir(std::string const& name) {
    fs::path p = fs::temp_directory_path() / ("wreathlab_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream     in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write(fs::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }

  /// Exit status of the CLI run with `args`, stdout captured into `out`.
  int run_cli(std::string const& args, std::string* out = nullptr) {
    char const* cli = std::getenv("WREATHLAB_CLI");
    if (!cli) {
      return -1;
    }
    fs::path const    capture = scratch_dir("cli") / "stdout.txt";
    std::string const cmd = std::string("'") + cli + "' " + args + " > '"
                            + capture.string() + "' 2>/dev/null";
    int const status = std::system(cmd.c_str());
    if (out) {
      *out = slurp(capture);
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  SuiteConfig config_of(std::string const& json) {
    return parse_suite_config(nlohmann::json::parse(json));
  }
}  // namespace

TEST_CASE("group expressions") {
  CHECK(build_group("S5").group.order() == 120);
  CHECK(build_group("C2^3*S3").group.order() == 48);
  CHECK(build_group("wreath(C2, C2*S3, proj2)").group.order() == 96);
  CHECK(build_group("(C2*C3)^2").group.order() == 36);
  CHECK(build_group(" C4 * ( S3 ) ").group.order() == 24);
  CHECK(build_group("wreath(C2, S3, triv4)").group.order() == 96);
  CHECK(build_group("wreath(wreath(C2, S2, id), S2, id)").group.order() == 128);

  auto const plan = parse_group_expr("C2^3*S3");
  REQUIRE(plan.kind == GroupPlan::Kind::product);
  CHECK(plan.children[0].kind == GroupPlan::Kind::power);
  CHECK(plan.children[0].param == 3);
  CHECK(plan.children[1].kind == GroupPlan::Kind::symmetric);
  CHECK(plan_order(parse_group_expr("S20")) == BigInt("2432902008176640000"));

  auto const w = build_group("wreath(C3, S4, id)");
  REQUIRE(w.wreath);
  CHECK(w.wreath->n == 4);
}

TEST_CASE("group expression parse errors carry positions") {
  CHECK(parse_error_at("C2*") == 3);
  CHECK(parse_error_at("") == 0);
  CHECK(parse_error_at("X5") == 0);
  CHECK(parse_error_at("S5)") == 2);
  CHECK(parse_error_at("(S3") == 3);
  CHECK(parse_error_at("wreath(C2, S3, foo)") == 15);
  CHECK(parse_error_at("C2^") == 3);
  CHECK_THROWS_AS(parse_sigma_spec("proj"), ParseError);
  CHECK(parse_sigma_spec("proj2").index == 2);
  CHECK(parse_sigma_spec("file:a/b.json").path == "a/b.json");
}

TEST_CASE("group expression semantic errors") {
  CHECK_THROWS_AS(build_group("wreath(C2, C6, id)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("wreath(C2, C2*S3, proj1)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("wreath(C2, C2*S3, proj3)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("S9"), OrderOverflow);
  CHECK_THROWS_AS(build_group("C2^40"), OrderOverflow);
  CHECK_THROWS_AS(build_group("wreath(C2, S3, file:/nonexistent.json)"), ConfigError);
}

TEST_CASE("sigma from a generator-image file") {
  auto const dir = scratch_dir("sigma");
  // sign of S3 onto S2, on the generators (0 1) and (1 2)
  write(dir / "sign.json",
        R"({"n": 2, "generators": [2, 1], "images": [[2, 1], [2, 1]]})");
  auto const b = build_group("wreath(C3, S3, file:" + (dir / "sign.json").string() + ")");
  REQUIRE(b.wreath);
  CHECK(b.group.order() == 54);
  CHECK(b.wreath->sigma_surjective());
  CHECK(hom_kernel_image(b.wreath->sigma).kernel.size() == 3);

  write(dir / "bad.json", R"({"n": 2, "generators": [2, 1], "images": [[2, 1], [1, 2]]})");
  CHECK_THROWS_AS(build_group("wreath(C3, S3, file:" + (dir / "bad.json").string() + ")"),
                  NotAHomomorphism);
  write(dir / "broken.json", "{");
  CHECK_THROWS_AS(build_group("wreath(C3, S3, file:" + (dir / "broken.json").string() + ")"),
                  ConfigError);
}

TEST_CASE("suite configuration errors") {
  CHECK_THROWS_AS(config_of("[]"), ConfigError);
  CHECK_THROWS_AS(config_of("{}"), ConfigError);
  CHECK_THROWS_AS(config_of(R"({"instances": [{"H": "C2", "G": "S3"}]})"), ConfigError);
  CHECK_THROWS_AS(config_of(R"({"instances": [{"H": "C2*", "G": "S3", "sigma": "id"}]})"),
                  ConfigError);
  CHECK_THROWS_AS(config_of(R"({"max_order": 0, "instances": []})"), ConfigError);
  CHECK_THROWS_AS(config_of(R"({"workers": "two", "instances": []})"), ConfigError);

  auto c = config_of(R"({"max_order": 5000, "max_aut": 50, "workers": 3,
                         "instances": [{"H": "C2", "G": "S3", "sigma": "id"}]})");
  CHECK(c.limits.max_order == 5000);
  CHECK(c.limits.max_aut_order == 50);
  CHECK(c.workers == 3);
  REQUIRE(c.instances.size() == 1);
  CHECK(c.instances[0].g == "S3");

  auto unbuildable = config_of(R"({"instances": [{"H": "C2", "G": "C6", "sigma": "id"}]})");
  CHECK_THROWS_AS(run_suite(unbuildable), ConfigError);
}

TEST_CASE("suite runs every check in a fixed order") {
  auto const r = run_suite(config_of(R"({"instances": [
      {"H": "C2", "G": "S3", "sigma": "id"},
      {"H": "C2", "G": "C2*S3", "sigma": "proj2"}]})"));
  CHECK(r.exit_code == 0);
  REQUIRE(r.instances.size() == 2);
  std::vector<std::string> names;
  for (auto const& t : r.instances[0].reports) {
    names.push_back(t.theorem);
    CHECK(t.verdict == Verdict::equal);
  }
  CHECK(names
        == std::vector<std::string>{"center-formula", "abelianization", "star-equivalence",
                                    "pure-splitting", "pullback-isomorphism",
                                    "extension-inequality"});
  // |W| = 96 is within the default cap of 200
  CHECK(r.instances[1].reports.back().verdict == Verdict::equal);
  CHECK(r.summary()["verdict_counts"]["equal"] == 12);
}

TEST_CASE("suite skips automorphism checks above the cap") {
  auto const r = run_suite(config_of(R"({"max_aut": 100, "instances": [
      {"H": "C3", "G": "S3", "sigma": "id"}]})"));
  CHECK(r.exit_code == 0);
  CHECK(r.instances[0].reports.back().verdict == Verdict::skipped);
  CHECK(r.summary()["verdict_counts"]["skipped"] == 1);
}

TEST_CASE("unmet hypotheses never fail the suite") {
  auto const r = run_suite(config_of(R"({"instances": [
      {"H": "C2", "G": "S3", "sigma": "triv3"}]})"));
  CHECK(r.exit_code == 0);
  bool flagged = false;
  for (auto const& t : r.instances[0].reports) {
    CHECK(t.verdict != Verdict::unequal);
    flagged = flagged || !t.hypotheses_met();
  }
  CHECK(flagged);
}

TEST_CASE("suite reports are byte-identical across runs and worker counts") {
  std::string const json = R"({"instances": [
      {"H": "C2", "G": "S2", "sigma": "id"},
      {"H": "C3", "G": "S3", "sigma": "id"},
      {"H": "S3", "G": "S2", "sigma": "id"},
      {"H": "C2", "G": "C2*S3", "sigma": "proj2"}]})";
  std::vector<fs::path> dirs;
  for (unsigned workers : {1u, 1u, 3u}) {
    auto c       = config_of(json);
    c.workers    = workers;
    c.output_dir = scratch_dir("det" + std::to_string(dirs.size()));
    run_suite(c);
    dirs.push_back(c.output_dir);
  }
  for (std::string file :
       {"summary.json", "instance_0.json", "instance_1.json", "instance_2.json",
        "instance_3.json"}) {
    INFO(file);
    std::string const first = slurp(dirs[0] / file);
    CHECK_FALSE(first.empty());
    CHECK(slurp(dirs[1] / file) == first);
    CHECK(slurp(dirs[2] / file) == first);
  }
  auto const summary = nlohmann::json::parse(slurp(dirs[0] / "summary.json"));
  CHECK(summary["exit_code"] == 0);
  CHECK(summary["instances"].size() == 4);
}

TEST_CASE("shipped default suite") {
  char const* src = std::getenv("WREATHLAB_SOURCE");
  if (!src) {
    SKIP("WREATHLAB_SOURCE is not set");
  }
  auto config       = load_suite_config(fs::path(src) / "suites" / "default.json");
  config.output_dir = scratch_dir("default_suite");
  auto const r      = run_suite(config);
  CHECK(r.exit_code == 0);
  REQUIRE(r.instances.size() == 16);
  for (auto const& inst : r.instances) {
    for (auto const& t : inst.reports) {
      INFO(inst.instance.h << " " << inst.instance.g << " " << t.theorem);
      CHECK(t.verdict != Verdict::unequal);
      if (t.theorem != "star-equivalence" && t.theorem != "extension-inequality") {
        CHECK(t.verdict == Verdict::equal);
      }
    }
  }
  // Below degree 5 the two conditions can disagree: C2 wr S2 is dihedral of
  // order 8, whose cyclic subgroup of order 4 is abelian, normal and not
  // inside the base.
  auto const& d8 = r.instances[0].reports[2];
  CHECK(d8.verdict == Verdict::hypothesis_unmet);
  CHECK(d8.lhs["holds"] == false);
  CHECK(d8.rhs["holds"] == true);
}

TEST_CASE("command-line interface") {
  if (!std::getenv("WREATHLAB_CLI")) {
    SKIP("WREATHLAB_CLI is not set");
  }
  std::string out;
  CHECK(run_cli("build 'C2^3*S3'", &out) == 0);
  CHECK(out.find("48") != std::string::npos);

  CHECK(run_cli("build 'C2*'") == 2);
  CHECK(run_cli("frobnicate") != 0);
  CHECK(run_cli("build S9") == 2);
  CHECK(run_cli("--max-order 400000 build S9") == 0);

  CHECK(run_cli("ab 'wreath(C3, S4, id)' --json -", &out) == 0);
  auto const ab = nlohmann::json::parse(out);
  CHECK(ab["torsion"] == nlohmann::json::array({6}));

  CHECK(run_cli("center 'wreath(C2, C2*S3, proj2)' --formula --json -", &out) == 0);
  CHECK(nlohmann::json::parse(out)["verdict"] == "equal");

  CHECK(run_cli("star-equiv 'wreath(C2, S5, id)' --json -", &out) == 0);
  CHECK(nlohmann::json::parse(out)["verdict"] == "equal");

  CHECK(run_cli("reid C4 --endo inv --json -", &out) == 0);
  CHECK(nlohmann::json::parse(out)["count"] == 2);
  CHECK(run_cli("reid S3 --endo inv") == 2);

  CHECK(run_cli("aut 'wreath(C2, S3, id)' --count-only", &out) == 0);
  CHECK(out.find("48") != std::string::npos);

  CHECK(run_cli("present-ab 'frame(virtual_braid(3))' --json -", &out) == 0);
  auto const fvb = nlohmann::json::parse(out);
  CHECK(fvb["free_rank"] == 2);
  CHECK(fvb["torsion"] == nlohmann::json::array({2}));

  auto const dir = scratch_dir("cli_suite");
  write(dir / "bad.json", R"({"instances": [{"H": "C2", "G": "S3", "sigma": "nope"}]})");
  CHECK(run_cli("suite '" + (dir / "bad.json").string() + "'") == 2);
  write(dir / "ok.json", R"({"instances": [{"H": "C2", "G": "S3", "sigma": "triv3"}]})");
  CHECK(run_cli("suite '" + (dir / "ok.json").string() + "' --output-dir '"
                + (dir / "out").string() + "'")
        == 0);
  CHECK(fs::exists(dir / "out" / "summary.json"));

  if (char const* src = std::getenv("WREATHLAB_SOURCE")) {
    fs::path const demo = fs::path(src) / "demos" / "framed_s3.txt";
    if (fs::exists(demo)) {
      CHECK(run_cli("present-ab '" + demo.string() + "' --json -", &out) == 0);
      CHECK(nlohmann::json::parse(out)["torsion"] == nlohmann::json::array({2, 2}));
    }
  }
}

TEST_CASE("environment variable sets the default order cap") {
  if (!std::getenv("WREATHLAB_CLI")) {
    SKIP("WREATHLAB_CLI is not set");
  }
  CHECK(run_cli("build S9") == 2);
  ::setenv("WREATHLAB_MAX_ORDER", "400000", 1);
  CHECK(run_cli("build S9") == 0);
  ::unsetenv("WREATHLAB_MAX_ORDER");
}
