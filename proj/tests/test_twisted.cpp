#include "catch_amalgamated.hpp"

#include <set>

#include "oracles.hpp"

using namespace wreathlab;

namespace {
  std::vector<FiniteGroup> small_groups(Elem max_order) {
    std::vector<FiniteGroup> out;
    for (auto const& g : oracle::test_groups()) {
      if (g.order() <= max_order) {
        out.push_back(g);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(symmetric(3)).size() == 6);
  CHECK(automorphisms(cyclic(4)).size() == 2);
  CHECK(automorphisms(direct_product(cyclic(2), cyclic(2))).size() == 6);
  CHECK(automorphisms(cyclic(1)).size() == 1);
  CHECK(automorphisms(cyclic(6)).size() == 2);
  CHECK(automorphisms(symmetric(4)).size() == 24);
  CHECK(automorphisms(build_group("C2^3").group).size() == 168);
  CHECK(automorphisms(build_group("wreath(C2, S2, id)").group).size() == 8);
  CHECK(automorphisms(build_group("wreath(C2, S3, id)").group).size() == 48);

  Limits tight;
  tight.max_aut_order = 10;
  CHECK_THROWS_AS(automorphisms(symmetric(4), tight), CapExceeded);
}

TEST_CASE("automorphisms are bijective homomorphisms in lexicographic order") {
  auto s4   = symmetric(4);
  auto auts = automorphisms(s4);
  for (auto const& a : auts) {
    CHECK(a.is_valid());
    CHECK(a.is_bijective());
  }
  auto const gens = greedy_generating_set(s4);
  for (std::size_t i = 1; i < auts.size(); ++i) {
    std::vector<Elem> prev, cur;
    for (Elem x : gens) {
      prev.push_back(auts[i - 1](x));
      cur.push_back(auts[i](x));
    }
    CHECK(prev < cur);
  }
}

TEST_CASE("automorphisms form a group") {
  for (auto const& g : small_groups(48)) {
    INFO(g.label());
    auto const auts = automorphisms(g);
    std::set<std::vector<Elem>> table;
    for (auto const& a : auts) {
      table.insert(a.images());
    }
    CHECK(table.size() == auts.size());
    CHECK(table.count(identity_hom(g).images()) == 1);
    for (auto const& a : auts) {
      CHECK(table.count(inverse_hom(a).images()) == 1);
      for (auto const& b : auts) {
        REQUIRE(table.count(compose(a, b).images()) == 1);
      }
    }
  }
}

TEST_CASE("Reidemeister numbers") {
  auto s3 = symmetric(3);
  CHECK(reidemeister_number(s3, identity_hom(s3)).count() == 3);

  auto c4  = cyclic(4);
  auto inv = hom_from_images(c4, c4, {1}, {3});
  auto p   = reidemeister_number(c4, inv);
  REQUIRE(p.count() == 2);
  CHECK(p.blocks[0] == std::vector<Elem>{0, 2});
  CHECK(p.blocks[1] == std::vector<Elem>{1, 3});

  CHECK(reidemeister_number(c4, trivial_hom(c4, c4)).count() == 1);
  CHECK_THROWS_AS(reidemeister_number(s3, identity_hom(c4)), InvalidArgument);
}

TEST_CASE("R(id) is the class count") {
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    CHECK(reidemeister_number(g, identity_hom(g)).count()
          == conjugacy_classes(g).size());
  }
}

TEST_CASE("twisted classes partition the group and match the orbit oracle") {
  for (auto const& g : small_groups(48)) {
    INFO(g.label());
    for (auto const& phi : automorphisms(g)) {
      auto const p = reidemeister_number(g, phi);
      CHECK(p.count() == oracle::twisted_class_count(g, phi.images()));
      std::vector<int> seen(g.order(), 0);
      for (auto const& b : p.blocks) {
        for (Elem x : b) {
          ++seen[x];
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
  }
  auto c6 = cyclic(6);
  for (auto const& f : homomorphisms(c6, c6)) {
    CHECK(reidemeister_number(c6, f).count()
          == oracle::twisted_class_count(c6, f.images()));
  }
}

TEST_CASE("R is unchanged by composing with inner automorphisms") {
  for (auto const& g : small_groups(48)) {
    INFO(g.label());
    for (auto const& phi : automorphisms(g)) {
      auto const r = reidemeister_number(g, phi).count();
      for (Elem a = 0; a < g.order(); ++a) {
        REQUIRE(reidemeister_number(g, compose(phi, inner_automorphism(g, a))).count()
                == r);
      }
    }
  }
}

TEST_CASE("induced quotient maps") {
  auto s3 = symmetric(3);
  auto a3 = commutator_subgroup(s3);
  auto id = induced_quotient_map(identity_hom(s3), a3);
  CHECK(id == identity_hom(id.source()));

  auto v4   = direct_product(cyclic(2), cyclic(2));
  auto swap = hom_from_images(v4, v4, {1, 2}, {2, 1});
  auto n    = subgroup_closure(v4, std::vector<Elem>{2});
  CHECK_THROWS_AS(induced_quotient_map(swap, n), NotInvariant);

  auto w    = build_wreath_from_exprs("C2", "S3", "id");
  auto base = w.base_subgroup();
  auto q    = quotient(w.group, base);
  int  checked = 0;
  for (auto const& phi : automorphisms(w.group)) {
    if (image_of(phi, base) == base) {
      auto bar = induced_quotient_map(phi, q);
      CHECK(bar.source().order() == 6);
      CHECK(bar.is_valid());
      CHECK(bar.is_bijective());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("extension inequality") {
  for (char const* g : {"S2", "S3"}) {
    auto w = build_wreath_from_exprs("C2", g, "id");
    auto r = extension_inequality_check(w);
    INFO(r.to_json().dump());
    CHECK(r.verdict == Verdict::equal);
    CHECK(r.lhs["base_preserving"].get<std::size_t>() > 0);
    for (auto const& pair : r.lhs["reidemeister_pairs"]) {
      CHECK(pair[0].get<std::size_t>() >= pair[1].get<std::size_t>());
    }
  }
  auto w = build_wreath_from_exprs("C2", "S3", "id");
  CHECK(conjugacy_classes(w.group).size() == 10);
  CHECK(conjugacy_classes(w.G).size() == 3);

  Limits tight;
  tight.max_aut_order = 20;
  CHECK_THROWS_AS(extension_inequality_check(w, tight), CapExceeded);
}

TEST_CASE("sections of surjections") {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  auto c2 = cyclic(2);
  auto pr = hom_from_images(v4, c2, {1, 2}, {1, 0});
  auto s  = find_section(pr);
  REQUIRE(s);
  CHECK(compose(pr, *s) == identity_hom(c2));

  auto c4 = cyclic(4);
  CHECK_FALSE(section_exists(hom_from_images(c4, c2, {1}, {1})));

  auto s3   = symmetric(3);
  auto sign = hom_from_images(s3, c2, {element_of(s3, {1, 0, 2}), element_of(s3, {0, 2, 1})},
                              {1, 1});
  auto t    = find_section(sign);
  REQUIRE(t);
  CHECK(compose(sign, *t) == identity_hom(c2));
  CHECK(s3.element_order((*t)(1)) == 2);

  auto w = build_wreath_from_exprs("C2", "S3", "id");
  CHECK(section_exists(w.pi));

  CHECK_THROWS_AS(find_section(trivial_hom(c4, c2)), InvalidArgument);
}
