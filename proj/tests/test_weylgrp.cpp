#include <doctest.h>

#include <cstdlib>

#include "springer/classdata.hpp"
#include "springer/error.hpp"
#include "springer/weylgrp.hpp"

using namespace springer;

TEST_CASE("brute-force class counts") {
  const std::pair<const char*, std::size_t> cases[] = {{"G2", 6}, {"F4", 25}, {"E6", 25}, {"E7", 60}};
  for (const auto& [t, n] : cases) {
    RootSystem rs(CartanType::parse(t));
    const PermGroup w = group_from_type(rs);
    const RawClassTable table = conjugacy_classes_bruteforce(w);
    CHECK_MESSAGE(table.classes.size() == n, t);
    std::uint64_t sum = 0;
    for (const RawClass& c : table.classes) {
      sum += c.size;
      CHECK(perm_order(c.representative) == c.element_order);
      CHECK(w.contains(c.representative));
    }
    CHECK(sum == w.order());
  }
}

TEST_CASE("classes are closed under conjugation by generators") {
  RootSystem rs(CartanType::parse("B3"));
  const PermGroup w = group_from_type(rs);
  const RawClassTable table = conjugacy_classes_bruteforce(w);
  // Class of an element: index of the class whose enumerated members contain it.
  std::vector<int> class_of(w.order(), -1);
  w.for_each([&](const PermGroup::Cursor& c) {
    const Perm p = c.perm();
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
      const Perm& rep = table.classes[k].representative;
      bool conj = false;
      w.for_each([&](const PermGroup::Cursor& g) {
        if (conj) return;
        const Perm gp = g.perm();
        if (compose(compose(gp, rep), inverse(gp)) == p) conj = true;
      });
      if (conj) {
        class_of[c.index()] = static_cast<int>(k);
        break;
      }
    }
  });
  for (const RawClass& c : table.classes)
    for (const Perm& s : w.generators()) {
      const Perm moved = compose(compose(s, c.representative), inverse(s));
      CHECK(class_of[w.index_of(moved)] == class_of[w.index_of(c.representative)]);
    }
}

TEST_CASE("parabolic subgroups and normalizers") {
  RootSystem f4(CartanType::parse("F4"));
  CHECK(parabolic_subgroup(f4, {0, 1, 2}).order() == 48);
  RootSystem e6(CartanType::parse("E6"));
  CHECK(parabolic_subgroup(e6, {0, 1, 2, 3, 4}).order() == 1920);
  CHECK(parabolic_subgroup(e6, {}).order() == 1);

  // W' for B2 in F4 is W(B2) with 5 classes.
  CHECK(normalizer_quotient_classes(f4, {1, 2}).classes.size() == 5);
  // W' for A2 in E6 is S3^2 x| S2 with 9 classes.
  CHECK(normalizer_quotient_classes(e6, {0, 2}).classes.size() == 9);
  // W' for a long simple root of G2 is S2.
  RootSystem g2(CartanType::parse("G2"));
  CHECK(normalizer_quotient_classes(g2, {1}).classes.size() == 2);

  // |N_W(W_J)| / |W_J| agrees with exhaustive search.
  const PermGroup w = group_from_type(f4);
  for (const std::vector<int>& J : std::vector<std::vector<int>>{{0}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}) {
    const ParabolicNormalizer pn = parabolic_normalizer(f4, J);
    CHECK(normalizer_order_bruteforce(f4, w, J) == pn.complement.order() * parabolic_subgroup(f4, J).order());
    for (const auto& K : pn.conjugates) CHECK(parabolics_conjugate_bruteforce(f4, w, J, K));
  }
}

TEST_CASE("enumeration budget") {
  const std::uint64_t saved = enumeration_budget();
  set_enumeration_budget(1000);
  RootSystem e6(CartanType::parse("E6"));
  CHECK_THROWS_AS(conjugacy_classes_bruteforce(group_from_type(e6)), BudgetExceededError);
  try {
    conjugacy_classes_bruteforce(group_from_type(e6));
  } catch (const BudgetExceededError& e) {
    CHECK(std::string(e.what()).find("51840") != std::string::npos);
  }
  set_enumeration_budget(saved);
  CHECK(conjugacy_classes_bruteforce(group_from_type(e6)).classes.size() == 25);
}
