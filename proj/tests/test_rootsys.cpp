#include <doctest.h>

#include <set>

#include "springer/error.hpp"
#include "springer/rootsys.hpp"
#include "springer/weylgrp.hpp"

using namespace springer;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8",
                        "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "G2", "F4", "E6", "E7", "E8"};

int expected_roots(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return -1;
}

}  // namespace

TEST_CASE("root counts match the classical formulas") {
  for (const char* s : kTypes) {
    RootSystem rs(CartanType::parse(s));
    CHECK_MESSAGE(rs.num_roots() == expected_roots(rs.type().simple()), s);
    CHECK(rs.num_positive() * 2 == rs.num_roots());
  }
  CHECK(RootSystem(CartanType::parse("A1")).num_roots() == 2);
  CHECK(RootSystem(CartanType::parse("G2")).num_roots() == 12);
  CHECK(RootSystem(CartanType::parse("E8")).num_roots() == 240);
}

TEST_CASE("Cartan matrices and reflections") {
  for (const char* s : kTypes) {
    RootSystem rs(CartanType::parse(s));
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        if (i == j) CHECK(rs.cartan(i, j) == 2);
        else CHECK(rs.cartan(i, j) <= 0);
      }
    // Each simple reflection is an involution permuting the roots and
    // preserving the symmetric form.
    for (int j = 0; j < rs.rank(); ++j) {
      const Perm& p = rs.reflection(j);
      CHECK(std::set<int>(p.begin(), p.end()).size() == static_cast<std::size_t>(rs.num_roots()));
      CHECK(is_identity(compose(p, p)));
      CHECK(p[j] == rs.negate(j));
      for (int r = 0; r < rs.num_roots(); r += 7)
        for (int t = 0; t < rs.num_roots(); t += 5) CHECK(rs.inner(p[r], p[t]) == rs.inner(r, t));
    }
  }
}

TEST_CASE("Weyl group orders from stabilizer chains") {
  for (const char* s : kTypes) {
    RootSystem rs(CartanType::parse(s));
    const PermGroup w = group_from_type(rs);
    CHECK_MESSAGE(w.order() == weyl_order(rs.type()), s);
    std::uint64_t product = 1;
    for (int t : w.transversal_sizes()) product *= static_cast<std::uint64_t>(t);
    CHECK(product == w.order());
  }
  CHECK(weyl_order(CartanType::parse("E8")) == 696729600ULL);
  CHECK(weyl_order(CartanType::parse("G2")) == 12);
  CHECK(weyl_order(CartanType::parse("A1")) == 2);
  CHECK(weyl_order(CartanType::parse("E7")) == 2903040ULL);
  CHECK(weyl_order(CartanType::parse("F4")) == 1152);
}

TEST_CASE("type parsing and validation") {
  CHECK(CartanType::parse("2A2+A1").name() == "2A2+A1");
  CHECK(CartanType::parse("A1+2A2") == CartanType::parse("2A2+A1"));
  CHECK(CartanType::parse("T").is_torus());
  CHECK_THROWS_AS(CartanType::parse("B1"), TypeError);
  CHECK_THROWS_AS(CartanType::parse("C2"), TypeError);
  CHECK_THROWS_AS(CartanType::parse("D3"), TypeError);
  CHECK_THROWS_AS(CartanType::parse("E9"), TypeError);
  CHECK_THROWS_AS(CartanType::parse("F3"), TypeError);
  CHECK_THROWS_AS(CartanType::parse("Q2"), TypeError);
}

TEST_CASE("base-l digits") {
  CHECK(base_l_digits(7, 2) == std::vector<int>{1, 1, 1});
  CHECK(base_l_digits(9, 3) == std::vector<int>{0, 0, 1});
  CHECK(base_l_digits(6, 5) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(base_l_digits(6, 4), ArgumentError);
  for (std::uint64_t l : {2, 3, 5, 7})
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      std::uint64_t sum = 0, power = 1;
      for (int d : base_l_digits(n, l)) {
        sum += d * power;
        power *= l;
      }
      REQUIRE(sum == n);
    }
}
