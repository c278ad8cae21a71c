#include "catch_amalgamated.hpp"

#include "oracles.hpp"

using namespace wreathlab;

namespace {
  std::vector<Elem> sorted(std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<Elem> members_of(Subgroup const& s) {
    return {s.members().begin(), s.members().end()};
  }

  AbelianInvariants torsion_only(std::vector<int> t) {
    AbelianInvariants a;
    for (int v : t) {
      a.torsion.push_back(v);
    }
    return a;
  }
}  // namespace

TEST_CASE("symmetric groups use lexicographic one-line numbering") {
  auto s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(permutation_of(s3, 0) == perm::Permutation{0, 1, 2});
  CHECK(permutation_of(s3, 2) == perm::Permutation{1, 0, 2});
  CHECK(permutation_of(s3, 5) == perm::Permutation{2, 1, 0});
  CHECK(element_of(s3, perm::transposition(3, 0, 1)) == 2);
  // left factor applied first: (0 1) then (1 2) sends 0 -> 1 -> 2
  Elem const t01 = element_of(s3, {1, 0, 2});
  Elem const t12 = element_of(s3, {0, 2, 1});
  CHECK(permutation_of(s3, s3.mul(t01, t12)) == perm::Permutation{2, 0, 1});
}

TEST_CASE("atomic builders") {
  CHECK(cyclic(1).order() == 1);
  CHECK(trivial_group().order() == 1);
  auto c23 = direct_power(cyclic(2), 3);
  CHECK(c23.order() == 8);
  CHECK(c23.is_abelian());
  for (Elem x = 0; x < 8; ++x) {
    CHECK(c23.mul(x, x) == identity_elem);
  }
  CHECK_THROWS_AS(symmetric(9), OrderOverflow);
  CHECK_THROWS_AS(cyclic(0), InvalidArgument);
  Limits big;
  big.max_order = 400000;
  CHECK(symmetric(9, big).order() == 362880);
}

TEST_CASE("product indices are mixed radix with the leftmost factor most significant") {
  auto g = direct_product(cyclic(2), cyclic(3));
  ProductCodec codec({2, 3});
  CHECK(codec.decode(4) == std::vector<Elem>{1, 1});
  CHECK(g.mul(codec.encode({1, 2}), codec.encode({1, 2})) == codec.encode({0, 1}));
}

TEST_CASE("group axioms hold for every constructed test group") {
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    for (Elem x = 0; x < g.order(); ++x) {
      CHECK(g.mul(identity_elem, x) == x);
      CHECK(g.mul(x, identity_elem) == x);
      CHECK(g.mul(x, g.inv(x)) == identity_elem);
    }
    if (g.order() <= 64) {
      for (Elem x = 0; x < g.order(); ++x) {
        std::vector<char> row(g.order(), 0), col(g.order(), 0);
        for (Elem y = 0; y < g.order(); ++y) {
          row[g.mul(x, y)] = 1;
          col[g.mul(y, x)] = 1;
          for (Elem z = 0; z < g.order(); ++z) {
            REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
          }
        }
        CHECK(std::count(row.begin(), row.end(), 1) == g.order());
        CHECK(std::count(col.begin(), col.end(), 1) == g.order());
      }
    }
  }
}

TEST_CASE("from_table rejects non-groups and relabels the identity to 0") {
  // Z/3 with the identity stored at index 2
  std::vector<Elem> table{1, 2, 0, 2, 0, 1, 0, 1, 2};
  auto g = FiniteGroup::from_table("Z3'", 3, table, {});
  CHECK(g.order() == 3);
  CHECK(g.mul(0, 1) == 1);
  std::vector<Elem> bad{0, 1, 1, 0};
  bad[3] = 1;  // row 1 is not a permutation
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 2, bad, {}), InvalidGroup);
  std::vector<Elem> non_assoc{0, 1, 2, 1, 0, 0, 2, 0, 1};
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 3, non_assoc, {}), InvalidGroup);
}

TEST_CASE("subgroup closure") {
  auto s3 = symmetric(3);
  CHECK(subgroup_closure(s3, std::vector<Elem>{2}).size() == 2);
  CHECK(subgroup_closure(s3, std::vector<Elem>{element_of(s3, {1, 0, 2}),
                                               element_of(s3, {0, 2, 1})})
            .size()
        == 6);
  CHECK(subgroup_closure(s3, std::vector<Elem>{}).size() == 1);

  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    for (Elem a = 0; a < g.order(); a += 1 + g.order() / 7) {
      for (Elem b = 0; b < g.order(); b += 1 + g.order() / 5) {
        auto const s = subgroup_closure(g, std::vector<Elem>{a, b});
        CHECK(members_of(s) == oracle::members(oracle::closure(g, {a, b})));
        CHECK(g.order() % s.size() == 0);
        // idempotent and monotone
        CHECK(subgroup_closure(g, members_of(s)) == s);
        CHECK(subgroup_closure(g, std::vector<Elem>{a}).is_subset_of(s));
        CHECK(s.is_subset_of(normal_closure(g, std::vector<Elem>{a, b})));
      }
    }
  }
}

TEST_CASE("normal closure") {
  auto s3 = symmetric(3);
  CHECK(normal_closure(s3, std::vector<Elem>{2}).size() == 6);
  CHECK(members_of(normal_closure(s3, std::vector<Elem>{3})) == std::vector<Elem>{0, 3, 4});
  auto c6 = cyclic(6);
  CHECK(members_of(normal_closure(c6, std::vector<Elem>{2})) == std::vector<Elem>{0, 2, 4});
  for (auto const& g : oracle::test_groups()) {
    for (Elem x = 0; x < g.order(); x += 1 + g.order() / 9) {
      auto const n = normal_closure(g, std::vector<Elem>{x});
      CHECK(is_normal(g, n));
    }
  }
}

TEST_CASE("center agrees with the all-pairs oracle") {
  CHECK(center(symmetric(3)).size() == 1);
  CHECK(center(cyclic(4)).size() == 4);
  auto c2s3 = direct_product(cyclic(2), symmetric(3));
  CHECK(members_of(center(c2s3)) == std::vector<Elem>{0, 6});
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    CHECK(members_of(center(g)) == oracle::members(oracle::center(g)));
  }
}

TEST_CASE("conjugacy classes agree with the orbit oracle") {
  auto const cls = conjugacy_classes(symmetric(3));
  REQUIRE(cls.size() == 3);
  CHECK(cls[0] == std::vector<Elem>{0});
  CHECK(cls[1] == std::vector<Elem>{1, 2, 5});
  CHECK(cls[2] == std::vector<Elem>{3, 4});
  CHECK(conjugacy_classes(cyclic(5)).size() == 5);
  CHECK(conjugacy_classes(symmetric(4)).size() == 5);
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    auto mine = conjugacy_classes(g);
    for (auto& c : mine) {
      c = sorted(c);
    }
    CHECK(mine == oracle::conjugacy_classes(g));
  }
}

TEST_CASE("commutator subgroup agrees with the all-commutators oracle") {
  CHECK(commutator_subgroup(symmetric(3)).size() == 3);
  CHECK(commutator_subgroup(symmetric(4)).size() == 12);
  CHECK(commutator_subgroup(cyclic(6)).size() == 1);
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    CHECK(members_of(commutator_subgroup(g))
          == oracle::members(oracle::derived_subgroup(g)));
  }
}

TEST_CASE("quotients") {
  auto s3 = symmetric(3);
  auto q  = quotient(s3, commutator_subgroup(s3));
  CHECK(q.group.order() == 2);
  CHECK(quotient(s3, Subgroup::trivial(s3)).group.order() == 6);
  CHECK_THROWS_AS(quotient(s3, subgroup_closure(s3, std::vector<Elem>{2})), NotNormal);

  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    for (auto const& n : {center(g), commutator_subgroup(g), Subgroup::whole(g)}) {
      auto const qq = quotient(g, n);
      CHECK(qq.group.order() * n.size() == g.order());
      CHECK(qq.projection.is_valid());
      CHECK(qq.projection.is_surjective());
      CHECK(hom_kernel_image(qq.projection).kernel == n);
      for (Elem c = 0; c < qq.group.order(); ++c) {
        // representatives are least members of their cosets
        Elem const r = qq.representatives[c];
        for (Elem x : n.members()) {
          CHECK(g.mul(r, x) >= r);
        }
      }
    }
  }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(cyclic(6)) == torsion_only({6}));
  CHECK(abelian_invariants(direct_product(cyclic(2), cyclic(4))) == torsion_only({2, 4}));
  CHECK(abelian_invariants(direct_product(cyclic(2), cyclic(3))) == torsion_only({6}));
  CHECK(abelian_invariants(cyclic(1)) == torsion_only({}));
  CHECK(abelian_invariants(direct_product({cyclic(6), cyclic(4), cyclic(9)}))
        == torsion_only({6, 36}));
  CHECK_THROWS_AS(abelian_invariants(symmetric(3)), NotAbelian);

  for (auto const& ex : {"C2*C2*C2", "C4*C2*C8", "C6*C10*C15", "C9*C3*C3",
                         "C12*C18", "C5^3", "C2*C4*C4*C2"}) {
    auto g = build_group(ex).group;
    INFO(ex);
    CHECK(abelian_invariants(g).torsion == oracle::abelian_torsion(g));
  }
  for (auto const& g : oracle::test_groups()) {
    INFO(g.label());
    auto const ab = abelianization_quotient(g).group;
    CHECK(abelian_invariants(ab).torsion == oracle::abelian_torsion(ab));
  }
}

TEST_CASE("abelian invariants are invariant under relabeling") {
  for (auto const& ex : {"C4*C2*C8", "C6*C10", "C3^3"}) {
    auto g = build_group(ex).group;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto [h, map] = oracle::relabel(g, seed);
      CHECK(abelian_invariants(h) == abelian_invariants(g));
    }
  }
}

TEST_CASE("invariants_from_cyclic_orders regroups primary parts") {
  CHECK(invariants_from_cyclic_orders(0, {6, 4, 9}) == torsion_only({6, 36}));
  CHECK(invariants_from_cyclic_orders(0, {2, 3}) == torsion_only({6}));
  CHECK(invariants_from_cyclic_orders(2, {1}).free_rank == 2);
}

TEST_CASE("homomorphisms from generator images") {
  auto s3 = symmetric(3);
  auto id = hom_from_images(s3, s3, {s3.generators().begin(), s3.generators().end()},
                            {s3.generators().begin(), s3.generators().end()});
  CHECK(id == identity_hom(s3));

  auto c4 = cyclic(4), c2 = cyclic(2);
  auto red = hom_from_images(c4, c2, {1}, {1});
  CHECK(red.is_surjective());
  CHECK(red(3) == 1);

  Elem const t01 = element_of(s3, {1, 0, 2});
  Elem const t12 = element_of(s3, {0, 2, 1});
  auto sign = hom_from_images(s3, c2, {t01, t12}, {1, 1});
  CHECK(is_homomorphism(s3, c2, sign.images()));
  auto const ki = hom_kernel_image(sign);
  CHECK(members_of(ki.kernel) == std::vector<Elem>{0, 3, 4});
  CHECK(ki.image.size() == 2);

  CHECK_THROWS_AS(hom_from_images(c4, c2, {2}, {1}), NotGenerating);
  CHECK_THROWS_AS(hom_from_images(c2, c4, {1}, {1}), NotAHomomorphism);
  CHECK_THROWS_AS(hom_from_images(s3, c2, {t01, t12}, {1, 0}), NotAHomomorphism);

  auto const triv = hom_kernel_image(trivial_hom(s3, c2));
  CHECK(triv.kernel.size() == 6);
  CHECK(triv.image.size() == 1);
  auto const idk = hom_kernel_image(identity_hom(s3));
  CHECK(idk.kernel.size() == 1);
  CHECK(idk.image.size() == 6);
}

TEST_CASE("kernels are normal") {
  for (auto const& g : oracle::test_groups()) {
    if (g.order() > 48) {
      continue;
    }
    auto const q = abelianization_quotient(g);
    CHECK(is_normal(g, hom_kernel_image(q.projection).kernel));
  }
}

TEST_CASE("homomorphism enumeration") {
  auto s3 = symmetric(3);
  CHECK(homomorphisms(s3, cyclic(2)).size() == 2);
  CHECK(homomorphisms(cyclic(6), cyclic(6)).size() == 6);
  CHECK(homomorphisms(s3, s3, true).size() == 6);
  for (auto const& f : homomorphisms(cyclic(4), symmetric(3))) {
    CHECK(f.is_valid());
  }
}

TEST_CASE("JSON round trip") {
  auto g  = symmetric(3);
  auto j  = group_to_json(g);
  auto g2 = group_from_json(j);
  CHECK(g2.order() == 6);
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      CHECK(g2.mul(x, y) == g.mul(x, y));
    }
  }
  CHECK(j["label"] == "S3");
}
