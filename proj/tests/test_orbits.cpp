#include <doctest.h>

#include <algorithm>
#include <map>

#include "springer/error.hpp"
#include "springer/orbits.hpp"

using namespace springer;

namespace {

const char* kExceptional[] = {"G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST_CASE("orbit tables") {
  const auto& g2 = orbit_table(CartanType::parse("G2"));
  REQUIRE(g2.size() == 5);
  const std::vector<std::string> labels = {"0", "A1", "~A1", "G2(a1)", "G2"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(g2[i].label == labels[i]);
    CHECK(g2[i].a_bar.name() == (i == 3 ? "S3" : "1"));
  }
  const auto& e8 = orbit_table(CartanType::parse("E8"));
  CHECK(std::count_if(e8.begin(), e8.end(), [](const NilpotentOrbit& o) { return o.distinguished; }) == 11);
  CHECK(find_orbit(CartanType::parse("E8"), "E8(a7)").a_bar.name() == "S5");

  std::vector<std::string> f4;
  for (const auto& o : orbit_table(CartanType::parse("F4")))
    if (o.distinguished) f4.push_back(o.a_bar.name());
  std::sort(f4.begin(), f4.end());
  CHECK(f4 == std::vector<std::string>{"1", "S2", "S2", "S4"});

  const CartanType e7 = CartanType::parse("E7");
  for (const char* o : {"4A1", "(A5)''"}) {
    CHECK(find_orbit(e7, o).a_bar.name() == "1");
    CHECK(find_orbit(e7, o).has_central_factor);
  }
  CHECK_THROWS_AS(orbit_table(CartanType::parse("B3")), TypeError);
}

TEST_CASE("component group irreducibles") {
  CHECK(modular_irreps(GroupSpec::sym(3), 2) == std::vector<std::string>{"triv", "phi21"});
  CHECK(modular_irreps(GroupSpec::sym(3), 3) == std::vector<std::string>{"triv", "eps"});
  CHECK(modular_irreps(GroupSpec::sym(5), 2).size() == 3);
  CHECK(ordinary_irreps(GroupSpec::sym(3)).size() == 3);
  CHECK(l_regular_partitions(5, 2).size() == 3);
  CHECK(l_regularization({1, 1, 1}, 3) == std::vector<int>{2, 1});
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t l : {2, 3, 5})
      CHECK(modular_irreps(GroupSpec::sym(n), l).size() == count_l_regular(GroupSpec::sym(n), l));
}

TEST_CASE("pairs counts") {
  CHECK(pairs_count(CartanType::parse("G2"), 5, CentralCharacter::Trivial) == 7);
  CHECK(pairs_count(CartanType::parse("E8"), 3, CentralCharacter::Trivial) == 105);
  CHECK(pairs_count(CartanType::parse("E6"), 2, CentralCharacter::Nontrivial) == 6);
  const std::tuple<const char*, CentralCharacter, std::size_t> large[] = {
      {"G2", CentralCharacter::Trivial, 7},     {"F4", CentralCharacter::Trivial, 26},
      {"E6", CentralCharacter::Trivial, 25},    {"E6", CentralCharacter::Nontrivial, 7},
      {"E7", CentralCharacter::Trivial, 60},    {"E7", CentralCharacter::Nontrivial, 26},
      {"E8", CentralCharacter::Trivial, 113}};
  for (const auto& [t, chi, n] : large) CHECK(pairs_count(CartanType::parse(t), 11, chi) == n);
  CHECK_THROWS_AS(pairs_count(CartanType::parse("E6"), 3, CentralCharacter::Nontrivial), InvalidCharacterError);
  CHECK_THROWS_AS(pairs_count(CartanType::parse("E7"), 2, CentralCharacter::Nontrivial), InvalidCharacterError);

  // Every local system names a modular irreducible of its component group.
  for (const char* t : kExceptional)
    for (std::uint64_t l : {2, 3, 5, 7})
      for (CentralCharacter chi : {CentralCharacter::Trivial, CentralCharacter::Nontrivial}) {
        const CartanType g = CartanType::parse(t);
        if (!character_valid(g, l, chi)) continue;
        const auto ps = pairs(g, l, chi);
        CHECK(ps.size() == pairs_count(g, l, chi));
        for (const PairLabel& p : ps) {
          const NilpotentOrbit& o = find_orbit(g, p.orbit);
          if (p.local_system.empty()) {
            CHECK(o.a_bar.name() == "1");
            continue;
          }
          const auto irr = modular_irreps(o.a_bar, l);
          CHECK_MESSAGE(std::find(irr.begin(), irr.end(), p.local_system) != irr.end(), p.text());
        }
      }
}

TEST_CASE("classical cuspidal counts") {
  CHECK(classical_cuspidal_count({Family::A, 3}, 2) == 1);
  CHECK(classical_cuspidal_count({Family::A, 2}, 2) == 0);
  CHECK(classical_cuspidal_count({Family::A, 2}, 3) == 1);
  CHECK(classical_cuspidal_count({Family::C, 3}, 2) == 2);
  CHECK(classical_cuspidal_count({Family::D, 4}, 2) == 2);
  CHECK(classical_cuspidal_count({Family::D, 5}, 2) == 2);
  CHECK(classical_cuspidal_count({Family::D, 6}, 2) == 3);
  CHECK(classical_cuspidal_count({Family::D, 7}, 2) == 3);
  CHECK(classical_cuspidal_count({Family::B, 3}, 2) == 1);
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = 4; n <= 7; ++n) CHECK(classical_cuspidal_count({f, n}, 3) == 0);
  CHECK(classical_distinguished_partitions({Family::C, 3}) == std::vector<std::vector<int>>{{6}, {4, 2}});
}

TEST_CASE("closure graphs") {
  const ClosureGraph& e6 = closure_graph(CartanType::parse("E6"));
  const std::vector<std::string> chain = {"2A2", "2A2+A1", "A5", "E6(a3)", "E6(a1)", "E6"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(e6.contains(chain[i + 1], chain[i]));
  CHECK(e6.contains("E6(a3)", "A5"));
  CHECK_FALSE(e6.contains("A5", "E6(a3)"));
  for (const char* t : kExceptional) {
    const ClosureGraph& g = closure_graph(CartanType::parse(t));
    for (const auto& [a, b] : g.edges) {
      CHECK(a != b);
      CHECK_FALSE(g.contains(b, a));
    }
    CHECK(minimal_distinguished_orbits(CartanType::parse(t)).size() == 1);
  }
  CHECK(minimal_distinguished_orbits(CartanType::parse("E8")) == std::vector<std::string>{"E8(a7)"});
}
