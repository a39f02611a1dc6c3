#include <doctest.h>

#include "springer/classdata.hpp"
#include "springer/error.hpp"
#include "springer/weylgrp.hpp"

using namespace springer;

namespace {

ClassStats brute(const CartanType& t) {
  RootSystem rs(t);
  return class_stats_from_table(conjugacy_classes_bruteforce(group_from_type(rs)));
}

// H^2 x| S2 acting on two copies of the root set of t.
PermGroup wreath_double_perm(const CartanType& t) {
  RootSystem rs(t);
  const int n = rs.num_roots();
  std::vector<Perm> gens;
  for (const Perm& s : rs.reflections()) {
    Perm p = identity_perm(2 * n);
    for (int i = 0; i < n; ++i) p[i] = s[i];
    gens.push_back(p);
  }
  Perm swap(2 * n);
  for (int i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(i + n);
    swap[i + n] = static_cast<Point>(i);
  }
  gens.push_back(swap);
  return PermGroup(2 * n, gens);
}

}  // namespace

TEST_CASE("classical class statistics agree with brute force") {
  for (int n = 1; n <= 5; ++n) CHECK(sym_class_stats(n + 1) == brute(CartanType(Family::A, n)));
  for (int n = 2; n <= 5; ++n) CHECK(hyperoctahedral_class_stats(n) == brute(CartanType(Family::B, n)));
  for (int n = 3; n <= 5; ++n) CHECK(hyperoctahedral_class_stats(n) == brute(CartanType(Family::C, n)));
  for (int n = 4; n <= 5; ++n) CHECK(type_d_class_stats(n) == brute(CartanType(Family::D, n)));
  CHECK(class_stats(GroupSpec::weyl(CartanType::parse("B4"))) == brute(CartanType::parse("B4")));
}

TEST_CASE("wreath doubles agree with explicit permutation groups") {
  for (const char* t : {"A2", "G2"}) {
    const PermGroup p = wreath_double_perm(CartanType::parse(t));
    const ClassStats explicit_stats = class_stats_from_table(conjugacy_classes_bruteforce(p));
    const GroupSpec spec = GroupSpec::wreath2(GroupSpec::weyl(CartanType::parse(t)));
    CHECK(spec.order() == p.order());
    CHECK(class_stats(spec) == explicit_stats);
    CHECK(class_stats(GroupSpec::explicit_perm(p, "explicit")) == explicit_stats);
  }
  CHECK(class_stats(GroupSpec::parse("Wr2(S3)")).group_order == 72);
  CHECK(class_stats(GroupSpec::parse("Wr2(W(G2))")).group_order == 288);
  CHECK(class_stats(GroupSpec::parse("Wr2(W(G2))")).num_classes() == 27);
  CHECK(count_l_regular(GroupSpec::parse("Wr2(W(G2))"), 3) == 14);
}

TEST_CASE("class statistics invariants") {
  for (const char* s : {"S6", "W(B3) x S2", "Wr2(S3)", "W(F4)", "W(E6)", "W(E7)", "W(E8)", "W(D6)", "S5 x S2"}) {
    const ClassStats st = class_stats(GroupSpec::parse(s));
    std::uint64_t sum = 0;
    for (const auto& [order, size] : st.entries) {
      sum += size;
      CHECK(st.group_order % order == 0);
    }
    CHECK_MESSAGE(sum == st.group_order, s);
  }
}

TEST_CASE("class counts and l-regular counts") {
  CHECK(class_stats(GroupSpec::sym(6)).num_classes() == 11);
  CHECK(count_l_regular(GroupSpec::sym(6), 2) == 4);
  CHECK(class_stats(GroupSpec::weyl(CartanType::parse("E8"))).num_classes() == 112);
  CHECK(count_l_regular(GroupSpec::weyl(CartanType::parse("E8")), 7) == 108);
  CHECK(count_l_regular(GroupSpec::weyl(CartanType::parse("F4")), 3) == 14);
  CHECK(count_l_regular(GroupSpec::parse("S3 x S2"), 5) == 6);
  CHECK(count_l_singular(GroupSpec::weyl(CartanType::parse("E7")), 7) == 2);
  CHECK(count_l_singular(GroupSpec::weyl(CartanType::parse("E6")), 5) == 2);
  CHECK(count_l_singular(GroupSpec::sym(2), 2) == 1);
}

TEST_CASE("curated W(E8) data") {
  const ClassStats& e8 = e8_class_stats();
  std::uint64_t sum = 0;
  for (const auto& [order, size] : e8.entries) sum += size;
  CHECK(sum == 696729600ULL);
  CHECK(e8.group_order == 696729600ULL);
  CHECK(e8.num_classes() == 112);
  const std::pair<std::uint64_t, std::size_t> regular[] = {{2, 12}, {3, 47}, {5, 95}, {7, 108}, {11, 112}};
  for (const auto& [l, n] : regular) CHECK(count_l_regular(e8, l) == n);
}

TEST_CASE("group spec normalization and parsing") {
  CHECK(GroupSpec::parse("S2 x W(B3)").name() == GroupSpec::parse("W(B3) x S2").name());
  CHECK(GroupSpec::parse("W(A2)").name() == "S3");
  CHECK(GroupSpec::parse("C2").name() == "S2");
  CHECK(GroupSpec::parse("1 x S2").name() == "S2");
  CHECK(GroupSpec::parse("Wr2(W(G2))").order() == 288);
  CHECK_THROWS_AS(GroupSpec::parse("Q8"), ArgumentError);
  CHECK_THROWS_AS(GroupSpec::parse("W(B3"), ArgumentError);
  CHECK(partitions(4).size() == 5);
}
