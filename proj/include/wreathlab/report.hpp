#ifndef WREATHLAB_REPORT_HPP_
#define WREATHLAB_REPORT_HPP_

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "finite_group.hpp"

namespace wreathlab {

  enum class Verdict { equal, unequal, hypothesis_unmet, skipped };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::equal:
        return "equal";
      case Verdict::unequal:
        return "unequal";
      case Verdict::hypothesis_unmet:
        return "hypothesis-unmet";
      case Verdict::skipped:
        return "skipped";
    }
    return "?";
  }

  struct Hypothesis {
    std::string name;
    bool        met = false;
  };

  /// Outcome of one brute-force theorem check.  Checks never refuse to run
  /// when a hypothesis is unmet; they compute, flag the hypothesis and
  /// report `hypothesis_unmet` instead of `unequal` when the sides differ.
  struct TheoremReport {
    std::string             theorem;
    std::vector<Hypothesis> hypotheses;
    Verdict                 verdict = Verdict::equal;
    nlohmann::json          lhs;
    nlohmann::json          rhs;
    std::optional<Elem>     witness;
    std::string             note;
    double                  runtime_ms = 0;

    bool hypotheses_met() const {
      return std::all_of(hypotheses.begin(), hypotheses.end(),
                         [](Hypothesis const& h) { return h.met; });
    }

    /// A genuine counterexample: sides differ although every hypothesis
    /// holds.
    bool is_violation() const {
      return verdict == Verdict::unequal;
    }

    /// Sets the verdict from the outcome of the comparison.
    void conclude(bool sides_agree, std::optional<Elem> failure = {}) {
      if (sides_agree) {
        verdict = Verdict::equal;
        return;
      }
      verdict = hypotheses_met() ? Verdict::unequal : Verdict::hypothesis_unmet;
      witness = failure;
      if (!witness) {
        throw InternalInconsistency(theorem
                                    + ": disagreement reported without a "
                                      "witness");
      }
    }

    nlohmann::json to_json() const {
      nlohmann::json hyps = nlohmann::json::array();
      for (auto const& h : hypotheses) {
        hyps.push_back({{"name", h.name}, {"met", h.met}});
      }
      nlohmann::json j = {{"theorem", theorem},
                          {"hypotheses", std::move(hyps)},
                          {"verdict", to_string(verdict)},
                          {"lhs", lhs},
                          {"rhs", rhs},
                          {"runtime_ms", runtime_ms}};
      if (witness) {
        j["witness"] = *witness;
      }
      if (!note.empty()) {
        j["note"] = note;
      }
      return j;
    }
  };

  class Stopwatch {
   public:
    Stopwatch() : _start(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
      return std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - _start)
          .count();
    }

   private:
    std::chrono::steady_clock::time_point _start;
  };

}  // namespace wreathlab

#endif  // WREATHLAB_REPORT_HPP_
