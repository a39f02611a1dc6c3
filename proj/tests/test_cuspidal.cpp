#include <doctest.h>

#include <algorithm>

#include "springer/cuspidal.hpp"
#include "springer/error.hpp"

using namespace springer;

namespace {

const char* kExceptional[] = {"G2", "F4", "E6", "E7", "E8"};

std::vector<std::size_t> sizes(const InductionTable& t) {
  std::vector<std::size_t> out;
  for (const auto& s : t.series) out.push_back(s.size);
  return out;
}

template <class F>
void for_each_case(F&& f) {
  for (const char* t : kExceptional)
    for (std::uint64_t l : {2, 3, 5, 7, 11, 13})
      for (CentralCharacter chi : {CentralCharacter::Trivial, CentralCharacter::Nontrivial}) {
        const CartanType g = CartanType::parse(t);
        if (character_valid(g, l, chi)) f(g, l, chi);
      }
}

}  // namespace

TEST_CASE("induction tables") {
  const InductionTable& f4 = induction_table(CartanType::parse("F4"), 2, CentralCharacter::Trivial);
  CHECK(sizes(f4) == std::vector<std::size_t>{4, 2, 2, 1, 1, 1, 1, 1});
  CHECK(f4.cuspidal.count == 4);
  const InductionTable& e8 = induction_table(CartanType::parse("E8"), 7, CentralCharacter::Trivial);
  CHECK(sizes(e8) == std::vector<std::size_t>{108, 4});
  CHECK(e8.cuspidal.count == 1);
  const InductionTable& e7 = induction_table(CartanType::parse("E7"), 3, CentralCharacter::Nontrivial);
  CHECK(sizes(e7) == std::vector<std::size_t>{14, 4, 4});
  CHECK(e7.cuspidal.count == 3);
}

TEST_CASE("cuspidal counts") {
  CHECK(cuspidal_count(CartanType::parse("E8"), 2, CentralCharacter::Trivial) == 10);
  CHECK(cuspidal_count(CartanType::parse("E7"), 3, CentralCharacter::Nontrivial) == 3);
  CHECK(cuspidal_count(CartanType::parse("G2"), 5, CentralCharacter::Trivial) == 1);
  CHECK_THROWS_AS(cuspidal_count(CartanType::parse("E6"), 3, CentralCharacter::Nontrivial), InvalidCharacterError);
  CHECK_THROWS_AS(cuspidal_count(CartanType::parse("E7"), 2, CentralCharacter::Nontrivial), InvalidCharacterError);
  CHECK_THROWS_AS(cuspidal_count(CartanType::parse("B3"), 2, CentralCharacter::Trivial), TypeError);
}

TEST_CASE("grand identity and series sizes") {
  for_each_case([](const CartanType& g, std::uint64_t l, CentralCharacter chi) {
    const InductionTable& t = induction_table(g, l, chi);
    std::size_t sum = t.cuspidal.count;
    for (const SeriesRecord& s : t.series) {
      CHECK(s.size == count_l_regular(s.quotient, l));
      CHECK(s.datum.character == chi);
      sum += s.size;
    }
    CHECK(sum == pairs_count(g, l, chi));
    CHECK(t.total == pairs_count(g, l, chi));
  });
}

TEST_CASE("easy primes give the characteristic-zero table") {
  for (const char* t : kExceptional) {
    const CartanType g = CartanType::parse(t);
    for (CentralCharacter chi : {CentralCharacter::Trivial, CentralCharacter::Nontrivial}) {
      if (!character_valid(g, 11, chi)) continue;
      const InductionTable& a = induction_table(g, 11, chi);
      const InductionTable& b = induction_table(g, 13, chi);
      REQUIRE(a.series.size() == b.series.size());
      for (std::size_t i = 0; i < a.series.size(); ++i) {
        CHECK(a.series[i].datum == b.series[i].datum);
        CHECK(a.series[i].size == b.series[i].size);
      }
      CHECK(a.cuspidal.count == b.cuspidal.count);
      CHECK(easy(g, 11));
    }
  }
}

TEST_CASE("classification of cuspidal pairs") {
  auto texts = [](const CuspidalReport& r) {
    std::vector<std::string> out;
    for (const auto& e : r.entries) out.push_back(e.text());
    return out;
  };
  const CuspidalReport& g2 = classify_cuspidal_pairs(CartanType::parse("G2"), 3, CentralCharacter::Trivial);
  CHECK(texts(g2) == std::vector<std::string>{"(G2,triv)", "(G2(a1),eps)"});
  for (const auto& e : g2.entries) CHECK(e.status == PairStatus::Proven);
  const CuspidalReport& g2_2 = classify_cuspidal_pairs(CartanType::parse("G2"), 2, CentralCharacter::Trivial);
  CHECK(texts(g2_2) == std::vector<std::string>{"(G2,triv)", "(G2(a1),triv)"});

  const CuspidalReport& e6 = classify_cuspidal_pairs(CartanType::parse("E6"), 3, CentralCharacter::Trivial);
  CHECK(texts(e6) == std::vector<std::string>{"(E6,triv)", "(E6(a1),triv)", "(E6(a3),eps)"});

  const CuspidalReport& f4 = classify_cuspidal_pairs(CartanType::parse("F4"), 2, CentralCharacter::Trivial);
  CHECK(f4.entries.size() == 4);
  for (const auto& e : f4.entries) {
    CHECK(e.pair.local_system == "triv");
    CHECK(find_orbit(CartanType::parse("F4"), e.pair.orbit).distinguished);
  }
  CHECK(std::count_if(f4.entries.begin(), f4.entries.end(),
                      [](const CuspidalEntry& e) { return e.status == PairStatus::Conjectural; }) == 2);

  const CuspidalReport& e6chi = classify_cuspidal_pairs(CartanType::parse("E6"), 2, CentralCharacter::Nontrivial);
  REQUIRE(e6chi.entries.size() == 2);
  CHECK(e6chi.entries[0].text() == "(E6(a3),triv x chi)");
  CHECK(e6chi.entries[1].status == PairStatus::Unresolved);
  CHECK(e6chi.entries[1].text() == "one of {(E6,chi), (E6(a1),chi)}");
  CHECK(e6chi.unresolved_slots() == 1);
}

TEST_CASE("classification invariants") {
  for_each_case([](const CartanType& g, std::uint64_t l, CentralCharacter chi) {
    const CuspidalReport& r = classify_cuspidal_pairs(g, l, chi);
    CHECK(r.entries.size() == r.count);
    CHECK(r.known_pairs().size() + r.unresolved_slots() == r.count);
    const PairLabel oreg{g.name(), "triv", CentralCharacter::Trivial};
    const auto known = r.known_pairs();
    if (chi == CentralCharacter::Trivial)
      CHECK(oreg_is_cuspidal(g, l) == (std::find(known.begin(), known.end(), oreg) != known.end()));
    if (good_prime(g, l))
      for (const auto& e : r.entries) CHECK(e.status == PairStatus::Proven);
  });
}

TEST_CASE("prime conditions") {
  const CartanType e8 = CartanType::parse("E8");
  CHECK(rather_good(e8, 7));
  CHECK_FALSE(easy(e8, 7));
  CHECK_FALSE(rather_good(CartanType::parse("E6"), 3));
  CHECK(easy(CartanType::parse("G2"), 5));
  CHECK(good_prime(CartanType::parse("E7"), 5));
  CHECK_FALSE(good_prime(CartanType::parse("E8"), 5));
  CHECK(very_good_prime(CartanType::parse("E6"), 5));
  CHECK_FALSE(big_enough_condition(CartanType::parse("E6")).empty());
}
