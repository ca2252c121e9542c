#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sylowlab/errors.hpp"
#include "sylowlab/quotient.hpp"
#include "sylowlab/structure.hpp"

using namespace sylowlab;
using fixtures::builtin;

TEST_CASE("permutation arithmetic") {
  const auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto b = Permutation::from_cycles(4, {{0, 1}});
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(((a * b) * a) == (a * (b * a)));
  CHECK(a.order() == 3);
  CHECK(Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}}).order() == 6);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(b.conjugate_by(a) == a.inverse() * b * a);
  CHECK(a.to_cycle_string() == "(1,2,3)");
  CHECK(Permutation(3).to_cycle_string() == "()");
  CHECK(a.one_based() == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("permutation rejects bad input") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(3) * Permutation(4), std::invalid_argument);
}

TEST_CASE("group orders from BSGS") {
  CHECK(builtin("S4")->order() == 24);
  CHECK(builtin("A5")->order() == 60);
  CHECK(builtin("D8")->order() == 8);
  CHECK(builtin("S6")->order() == 720);
  CHECK(builtin("C7")->elements().size() == 7);
  CHECK(builtin("S3")->elements().size() == 6);
  CHECK(builtin("S4")->elements().size() == 24);
}

TEST_CASE("BSGS order cap") {
  const Limits saved = limits();
  limits().bsgs_order_cap = 1000;
  CHECK_THROWS_AS(builtin("S7"), CapExceeded);
  limits() = saved;
  limits().enumeration_cap = 100;
  auto s5 = builtin("S5");
  CHECK(s5->order() == 120);
  CHECK_THROWS_AS(s5->enumeration(), CapExceeded);
  limits() = saved;
}

TEST_CASE("membership") {
  auto s4 = builtin("S4");
  auto a4 = builtin("A4");
  const auto t = Permutation::from_cycles(4, {{0, 1}});
  CHECK(s4->contains(t));
  CHECK_FALSE(a4->contains(t));
  CHECK(a4->contains(Permutation(4)));
  CHECK_THROWS_AS(s4->contains(Permutation(5)), std::invalid_argument);
}

TEST_CASE("BSGS order matches breadth-first closure and membership matches the element list") {
  std::mt19937_64 rng(7);
  for (const auto& entry : builtin_catalog(60)) {
    auto g = entry.build();
    const auto brute = oracle::closure(g->generators(), g->degree());
    REQUIRE(brute.size() == g->order());
    CHECK(oracle::as_set(*g) == brute);
    std::vector<Point> pts(g->degree());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Point>(i);
    for (int k = 0; k < 100; ++k) {
      std::shuffle(pts.begin(), pts.end(), rng);
      Permutation x(pts);
      CHECK(g->contains(x) == (brute.count(x) > 0));
    }
  }
}

TEST_CASE("subgroup generation") {
  auto s3 = builtin("S3");
  std::vector<Permutation> none;
  CHECK(subgroup_generated(s3, std::span<const Permutation>(none)).order() == 1);
  std::vector<Permutation> three{Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK(subgroup_generated(s3, std::span<const Permutation>(three)).order() == 3);
  std::vector<Permutation> both{Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK(subgroup_generated(s3, std::span<const Permutation>(both)).order() == 6);
  auto a4 = builtin("A4");
  std::vector<Permutation> odd{Permutation::from_cycles(4, {{0, 1}})};
  CHECK_THROWS_AS(subgroup_generated(a4, std::span<const Permutation>(odd)), std::invalid_argument);
}

TEST_CASE("subgroup equality ignores the generating set") {
  auto s4 = builtin("S4");
  std::vector<Permutation> g1{Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  std::vector<Permutation> g2{Permutation::from_cycles(4, {{0, 3, 2, 1}})};
  CHECK(subgroup_generated(s4, std::span<const Permutation>(g1)) ==
        subgroup_generated(s4, std::span<const Permutation>(g2)));
}

TEST_CASE("normal closure") {
  auto s3 = builtin("S3");
  const Subgroup g3 = whole_group(s3);
  ElementId t = *s3->enumeration().index_of(Permutation::from_cycles(3, {{0, 1}}));
  CHECK(normal_closure(g3, std::vector<ElementId>{t}).order() == 6);

  auto s4 = builtin("S4");
  const Subgroup g4 = whole_group(s4);
  ElementId c = *s4->enumeration().index_of(Permutation::from_cycles(4, {{0, 1, 2}}));
  const Subgroup n = normal_closure(g4, std::vector<ElementId>{c});
  CHECK(oracle::as_set(n) == oracle::as_set(*builtin("A4")));
  CHECK(oracle::is_normal(oracle::as_set(n), oracle::as_set(g4)));

  auto c6 = builtin("C6");
  const Subgroup g6 = whole_group(c6);
  for (ElementId x = 0; x < 6; ++x)
    CHECK(normal_closure(g6, std::vector<ElementId>{x}) == cyclic_subgroup(c6, x));
}

TEST_CASE("derived subgroup agrees with the commutator closure") {
  for (const char* spec : {"S4", "A4", "D8", "Q8", "S3xS3", "A5", "C2xD12", "Q16"}) {
    auto g = builtin(spec);
    CHECK(oracle::as_set(derived_subgroup(whole_group(g))) == oracle::derived(oracle::as_set(*g)));
  }
  CHECK(derived_subgroup(whole_group(builtin("S4"))).order() == 12);
  CHECK(derived_subgroup(whole_group(builtin("A4"))).order() == 4);
  CHECK(derived_subgroup(whole_group(builtin("C5xC5"))).is_trivial());
}

TEST_CASE("center, centralizer and normalizer") {
  auto d8 = builtin("D8");
  CHECK(center(whole_group(d8)).order() == 2);
  for (const char* spec : {"D8", "Q8", "S4", "C3xS3", "D12"}) {
    auto g = builtin(spec);
    CHECK(oracle::as_set(center(whole_group(g))) == oracle::center(oracle::as_set(*g)));
  }
  auto s4 = builtin("S4");
  const Subgroup g = whole_group(s4);
  ElementId t = *s4->enumeration().index_of(Permutation::from_cycles(4, {{0, 1}}));
  CHECK(centralizer(g, std::vector<ElementId>{t}).order() == 4);
}

TEST_CASE("conjugate subgroups") {
  auto s4 = builtin("S4");
  const Subgroup g = whole_group(s4);
  const Enumeration& e = s4->enumeration();
  std::vector<ElementId> gens{*e.index_of(Permutation::from_cycles(4, {{0, 1, 2, 3}})),
                              *e.index_of(Permutation::from_cycles(4, {{0, 2}}))};
  const Subgroup p = subgroup_generated(s4, std::span<const ElementId>(gens));
  REQUIRE(p.order() == 8);
  const Subgroup n = normalizer(g, p);
  n.elements().for_each([&](ElementId x) { CHECK(conjugate_subgroup(p, x) == p); });

  std::set<std::size_t> sylows;
  g.elements().for_each([&](ElementId x) {
    const Subgroup px = conjugate_subgroup(p, x);
    CHECK(px.order() == 8);
    CHECK(conjugate_subgroup(px, e.inv(x)) == p);
    sylows.insert(px.key());
  });
  CHECK(sylows.size() == 3);
  CHECK_THROWS_AS(conjugate_subgroup(p, Permutation(5)), std::invalid_argument);
}

TEST_CASE("conjugation is a right action") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"S4", "S3xS3", "A5", "Q8xC3"}) {
    auto grp = builtin(spec);
    const Subgroup g = whole_group(grp);
    const Enumeration& e = grp->enumeration();
    auto lattice = all_subgroups(g);
    std::uniform_int_distribution<std::size_t> pick_h(0, lattice->subgroups.size() - 1);
    std::uniform_int_distribution<ElementId> pick_x(0, static_cast<ElementId>(e.size() - 1));
    for (int k = 0; k < 30; ++k) {
      const Subgroup& h = lattice->subgroups[pick_h(rng)];
      ElementId x = pick_x(rng), y = pick_x(rng);
      const Subgroup hx = conjugate_subgroup(h, x);
      CHECK(hx.order() == h.order());
      CHECK(conjugate_subgroup(hx, y) == conjugate_subgroup(h, e.mul(x, y)));
    }
  }
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const char* spec) {
    std::vector<std::size_t> out;
    for (const auto& c : conjugacy_classes(whole_group(builtin(spec)))) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto brute = [](const char* spec) {
    auto out = oracle::class_sizes(oracle::as_set(*builtin(spec)));
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(sizes("S3") == std::vector<std::size_t>{1, 2, 3});
  CHECK(sizes("S4").size() == 5);
  CHECK(sizes("C2xC6").size() == 12);
  for (const char* spec : {"S3", "S4", "A5", "Q8", "D10xC2", "S3xS3"}) CHECK(sizes(spec) == brute(spec));
}

TEST_CASE("right transversals") {
  auto s4 = builtin("S4");
  const Subgroup g = whole_group(s4);
  auto whole = right_transversal(g, g);
  REQUIRE(whole.size() == 1);
  CHECK(s4->enumeration().element(whole[0]).is_identity());

  const Enumeration& e = s4->enumeration();
  std::vector<ElementId> gens{*e.index_of(Permutation::from_cycles(4, {{0, 1, 2, 3}})),
                              *e.index_of(Permutation::from_cycles(4, {{0, 2}}))};
  const Subgroup p = subgroup_generated(s4, std::span<const ElementId>(gens));
  auto reps = right_transversal(g, p);
  CHECK(reps.size() == 3);
  CHECK(e.element(reps[0]).is_identity());
  // representatives lie in distinct right cosets
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(p.contains(e.mul(reps[i], e.inv(reps[j]))));

  auto a5 = builtin("A5");
  const Subgroup g5 = whole_group(a5);
  CHECK(right_transversal(g5, normalizer(g5, cyclic_subgroup(a5, *a5->enumeration().index_of(
                                                                     Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})))))
            .size() == 6);
}

TEST_CASE("quotient actions") {
  auto s4 = builtin("S4");
  const Subgroup g = whole_group(s4);
  const auto normals = normal_subgroups(g);
  const Subgroup v4 = (*normals)[1];
  REQUIRE(v4.order() == 4);
  auto q = quotient_action(g, v4);
  CHECK(q.image()->order() == 6);
  CHECK_FALSE(is_abelian(whole_group(q.image())));
  CHECK(quotient_action(g, g).image()->order() == 1);

  auto a4 = builtin("A4");
  const Subgroup ga4 = whole_group(a4);
  CHECK(quotient_action(ga4, (*normal_subgroups(ga4))[1]).image()->order() == 3);

  ElementId t = *s4->enumeration().index_of(Permutation::from_cycles(4, {{0, 1}}));
  CHECK_THROWS_AS(quotient_action(g, cyclic_subgroup(s4, t)), std::invalid_argument);

  const Limits saved = limits();
  limits().quotient_degree_cap = 4;
  CHECK_THROWS_AS(quotient_action(g, trivial_subgroup(s4)), CapExceeded);
  limits() = saved;
}

TEST_CASE("quotient projection is a homomorphism and orders multiply") {
  std::mt19937_64 rng(3);
  for (const char* spec : {"S4", "S3xS3", "D12xC2", "Q8xC3", "C4xS3"}) {
    auto grp = builtin(spec);
    const Subgroup g = whole_group(grp);
    const Enumeration& e = grp->enumeration();
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(e.size() - 1));
    for (const auto& n : *normal_subgroups(g)) {
      auto q = quotient_action(g, n);
      CHECK(q.image()->order() * n.order() == g.order());
      for (int k = 0; k < 100; ++k) {
        ElementId a = pick(rng), b = pick(rng);
        CHECK(q.project(e.mul(a, b)) == q.project(a) * q.project(b));
      }
    }
  }
}

TEST_CASE("Lagrange on every lattice subgroup") {
  for (const auto& entry : builtin_catalog(48)) {
    auto g = whole_group(entry.build());
    for (const auto& h : all_subgroups(g)->subgroups) CHECK(g.order() % h.order() == 0);
  }
}

TEST_CASE("quaternion recognition") {
  CHECK(is_quaternion8(whole_group(builtin("Q8"))));
  CHECK_FALSE(is_quaternion8(whole_group(builtin("C8"))));
  CHECK_FALSE(is_quaternion8(whole_group(builtin("D8"))));
  CHECK_FALSE(is_quaternion8(whole_group(builtin("C2xC4"))));
  CHECK_FALSE(is_quaternion8(whole_group(builtin("Q16"))));
}
