#ifndef WREATHLAB_SUITE_HPP_
#define WREATHLAB_SUITE_HPP_

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "expr.hpp"
#include "report.hpp"
#include "structure.hpp"
#include "twisted.hpp"
#include "wreath.hpp"

namespace wreathlab {

  struct SuiteInstance {
    std::string h;
    std::string g;
    std::string sigma;
  };

  struct SuiteConfig {
    Limits                     limits;
    unsigned                   workers = 1;
    std::filesystem::path      output_dir;
    std::vector<SuiteInstance> instances;
  };

  namespace detail {
    inline std::uint64_t positive_field(nlohmann::json const& j,
                                        char const*           key,
                                        std::uint64_t         fallback) {
      if (!j.contains(key)) {
        return fallback;
      }
      auto const& v = j[key];
      if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
        throw ConfigError(std::string("suite config: '") + key
                          + "' must be a positive integer");
      }
      return v.get<std::uint64_t>();
    }
  }  // namespace detail

  /// Config JSON:
  ///
  ///     {"max_order": 100000, "max_aut": 200, "workers": 1,
  ///      "output_dir": "reports",
  ///      "instances": [{"H": "C2", "G": "S3", "sigma": "id"}, ...]}
  ///
  /// Every expression is parsed here so that malformed input fails before
  /// any computation starts.
  inline SuiteConfig parse_suite_config(nlohmann::json const& j,
                                        Limits const&         defaults = {}) {
    if (!j.is_object()) {
      throw ConfigError("suite config must be a JSON object");
    }
    SuiteConfig c;
    c.limits                = defaults;
    c.limits.max_order      = detail::positive_field(j, "max_order", defaults.max_order);
    c.limits.max_aut_order  = detail::positive_field(j, "max_aut", defaults.max_aut_order);
    c.workers = static_cast<unsigned>(detail::positive_field(j, "workers", 1));
    if (j.contains("output_dir")) {
      if (!j["output_dir"].is_string()) {
        throw ConfigError("suite config: 'output_dir' must be a string");
      }
      c.output_dir = j["output_dir"].get<std::string>();
    }
    if (!j.contains("instances") || !j["instances"].is_array()) {
      throw ConfigError("suite config: 'instances' must be an array");
    }
    for (std::size_t i = 0; i < j["instances"].size(); ++i) {
      auto const& inst = j["instances"][i];
      SuiteInstance s;
      try {
        s.h     = inst.at("H").get<std::string>();
        s.g     = inst.at("G").get<std::string>();
        s.sigma = inst.at("sigma").get<std::string>();
      } catch (nlohmann::json::exception const&) {
        throw ConfigError("suite config: instance " + std::to_string(i)
                          + " needs string fields H, G and sigma");
      }
      try {
        parse_group_expr(s.h);
        parse_group_expr(s.g);
        parse_sigma_spec(s.sigma);
      } catch (ParseError const& e) {
        throw ConfigError("suite config: instance " + std::to_string(i) + ": "
                          + e.what());
      }
      c.instances.push_back(std::move(s));
    }
    return c;
  }

  inline SuiteConfig load_suite_config(std::filesystem::path const& path,
                                       Limits const&                defaults = {}) {
    return parse_suite_config(detail::read_json_file(path.string()), defaults);
  }

  struct InstanceResult {
    SuiteInstance              instance;
    std::size_t                order = 0;
    std::vector<TheoremReport> reports;
    double                     runtime_ms = 0;

    bool has_violation() const {
      return std::any_of(reports.begin(), reports.end(),
                         [](TheoremReport const& r) { return r.is_violation(); });
    }

    /// Without timings, so that identical configs give identical bytes.
    nlohmann::json to_json() const {
      nlohmann::json reps = nlohmann::json::array();
      for (auto const& r : reports) {
        auto j = r.to_json();
        j.erase("runtime_ms");
        reps.push_back(std::move(j));
      }
      return {{"H", instance.h},
              {"G", instance.g},
              {"sigma", instance.sigma},
              {"order", order},
              {"reports", std::move(reps)}};
    }
  };

  struct SuiteResult {
    std::vector<InstanceResult> instances;
    int                         exit_code = 0;

    nlohmann::json summary() const {
      nlohmann::json counts = {{"equal", 0},
                               {"unequal", 0},
                               {"hypothesis-unmet", 0},
                               {"skipped", 0}};
      nlohmann::json rows   = nlohmann::json::array();
      for (std::size_t i = 0; i < instances.size(); ++i) {
        auto const&    r = instances[i];
        nlohmann::json verdicts;
        for (auto const& t : r.reports) {
          verdicts[t.theorem] = to_string(t.verdict);
          counts[to_string(t.verdict)] = counts[to_string(t.verdict)].get<int>() + 1;
        }
        rows.push_back({{"index", i},
                        {"H", r.instance.h},
                        {"G", r.instance.g},
                        {"sigma", r.instance.sigma},
                        {"order", r.order},
                        {"verdicts", std::move(verdicts)}});
      }
      return {{"instances", std::move(rows)},
              {"verdict_counts", std::move(counts)},
              {"exit_code", exit_code}};
    }
  };

  /// Phi: W -> G x_{S_n} (H wr S_n) validated as an isomorphism, with the
  /// order of the fiber product compared against |H|^n |G|.
  inline TheoremReport pullback_report(WreathGroup const& w, Limits const& limits) {
    Stopwatch     clock;
    TheoremReport r;
    r.theorem              = "pullback-isomorphism";
    FiberProduct const fp  = fiber_product(w.G, w.sigma, w.H, w.n, limits);
    std::uint64_t      expected = w.G.order();
    for (int i = 0; i < w.n; ++i) {
      expected *= w.H.order();
    }
    r.lhs = {{"fiber_product_order", fp.group.order()}};
    r.rhs = {{"expected_order", expected}};
    std::optional<Elem> witness;
    try {
      pullback_isomorphism(w, fp);
    } catch (InternalInconsistency const& e) {
      r.note  = e.what();
      witness = identity_elem;
    }
    if (fp.group.order() != expected && !witness) {
      witness = identity_elem;
    }
    r.conclude(!witness, witness);
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }

  namespace detail {
    inline TheoremReport skipped_report(std::string theorem, std::string why) {
      TheoremReport r;
      r.theorem = std::move(theorem);
      r.verdict = Verdict::skipped;
      r.note    = std::move(why);
      return r;
    }

    inline InstanceResult run_instance(SuiteInstance const& inst,
                                       WreathGroup const&   w,
                                       Limits const&        limits) {
      Stopwatch      clock;
      InstanceResult out{inst, w.group.order(), {}, 0};
      out.reports.push_back(verify_center_formula(w));
      out.reports.push_back(verify_abelianization(w, limits));
      out.reports.push_back(verify_star_equivalence(w));
      out.reports.push_back(pure_subgroup_split(w));
      out.reports.push_back(wreathlab::pullback_report(w, limits));
      if (w.group.order() > limits.max_aut_order) {
        out.reports.push_back(skipped_report(
            "extension-inequality",
            "|W| = " + std::to_string(w.group.order())
                + " exceeds the automorphism cap "
                + std::to_string(limits.max_aut_order)));
      } else {
        out.reports.push_back(extension_inequality_check(w, limits));
      }
      out.runtime_ms = clock.elapsed_ms();
      return out;
    }
  }  // namespace detail

  /// Runs every check on every instance, at most config.workers at a time,
  /// then writes instance_<i>.json and summary.json into output_dir (when
  /// set).  Instances that cannot be built raise ConfigError before any
  /// check runs.  `log` receives one human-readable line per instance.
  inline SuiteResult run_suite(SuiteConfig const& config, std::ostream* log = nullptr) {
    std::vector<WreathGroup> groups;
    for (std::size_t i = 0; i < config.instances.size(); ++i) {
      auto const& inst = config.instances[i];
      try {
        groups.push_back(
            build_wreath_from_exprs(inst.h, inst.g, inst.sigma, config.limits));
      } catch (Error const& e) {
        throw ConfigError("instance " + std::to_string(i) + " (" + inst.h + ", "
                          + inst.g + ", " + inst.sigma + "): " + e.what());
      }
    }

    SuiteResult result;
    result.instances.resize(groups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < groups.size(); i = next++) {
        result.instances[i]
            = detail::run_instance(config.instances[i], groups[i], config.limits);
      }
    };
    unsigned const nthreads
        = std::max(1u, std::min<unsigned>(config.workers,
                                          static_cast<unsigned>(groups.size())));
    if (nthreads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back(worker);
      }
    }

    for (auto const& r : result.instances) {
      if (r.has_violation()) {
        result.exit_code = 1;
      }
    }

    if (log) {
      for (std::size_t i = 0; i < result.instances.size(); ++i) {
        auto const& r = result.instances[i];
        *log << "[" << i << "] wreath(" << r.instance.h << ", " << r.instance.g
             << ", " << r.instance.sigma << ") |W|=" << r.order;
        for (auto const& t : r.reports) {
          *log << " " << t.theorem << "=" << to_string(t.verdict);
        }
        *log << " (" << static_cast<long>(r.runtime_ms) << " ms)\n";
      }
    }

    if (!config.output_dir.empty()) {
      std::filesystem::create_directories(config.output_dir);
      for (std::size_t i = 0; i < result.instances.size(); ++i) {
        std::ofstream f(config.output_dir / ("instance_" + std::to_string(i) + ".json"));
        f << result.instances[i].to_json().dump(2) << "\n";
      }
      std::ofstream f(config.output_dir / "summary.json");
      f << result.summary().dump(2) << "\n";
    }
    return result;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_SUITE_HPP_
