#ifndef WREATHLAB_SERIALIZE_HPP_
#define WREATHLAB_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "finite_group.hpp"
#include "quotient.hpp"
#include "subgroup.hpp"

namespace wreathlab {

  /// {label, order, mul (row-major, order*order entries), generators}
  inline nlohmann::json group_to_json(FiniteGroup const& g) {
    std::vector<Elem> mul;
    mul.reserve(static_cast<std::size_t>(g.order()) * g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        mul.push_back(g.mul(x, y));
      }
    }
    return {{"label", g.label()},
            {"order", g.order()},
            {"mul", std::move(mul)},
            {"generators",
             std::vector<Elem>(g.generators().begin(), g.generators().end())}};
  }

  inline FiniteGroup group_from_json(nlohmann::json const& j) {
    try {
      auto gens = j.contains("generators")
                      ? j.at("generators").get<std::vector<Elem>>()
                      : std::vector<Elem>{};
      return FiniteGroup::from_table(j.value("label", std::string("G")),
                                     j.at("order").get<Elem>(),
                                     j.at("mul").get<std::vector<Elem>>(),
                                     std::move(gens));
    } catch (nlohmann::json::exception const& e) {
      throw InvalidGroup(std::string("group_from_json: ") + e.what());
    }
  }

  inline nlohmann::json to_json(AbelianInvariants const& a) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto const& d : a.torsion) {
      if (d <= BigInt(INT64_MAX)) {
        torsion.push_back(static_cast<std::int64_t>(d));
      } else {
        torsion.push_back(d.str());
      }
    }
    return {{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}};
  }

  inline nlohmann::json to_json(Subgroup const& s,
                                std::size_t     max_listed = 64) {
    nlohmann::json j = {{"order", s.size()}};
    if (s.size() <= max_listed) {
      j["members"] = std::vector<Elem>(s.members().begin(), s.members().end());
    }
    return j;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_SERIALIZE_HPP_
