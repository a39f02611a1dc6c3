#include <doctest.h>

#include <algorithm>

#include "springer/classdata.hpp"
#include "springer/error.hpp"
#include "springer/levis.hpp"

using namespace springer;

namespace {

std::vector<std::string> names(const CartanType& g) {
  std::vector<std::string> out;
  for (const auto& c : levi_classes(g)) out.push_back(c.name);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("Levi classes") {
  CHECK(names(CartanType::parse("G2")) == std::vector<std::string>{"T", "A1", "~A1", "G2"});
  const std::pair<const char*, std::size_t> counts[] = {{"G2", 4}, {"F4", 12}, {"E6", 17}, {"E7", 32}, {"E8", 41}};
  for (const auto& [t, n] : counts) CHECK(levi_classes(CartanType::parse(t)).size() == n);

  const CartanType e7 = CartanType::parse("E7");
  CHECK(find_levi(e7, "(3A1)'").normalizer_quotient.name() == GroupSpec::parse("W(C3) x S2").name());
  CHECK(find_levi(e7, "(3A1)''").normalizer_quotient.name() == "W(F4)");
  const CartanType f4 = CartanType::parse("F4");
  CHECK(find_levi(f4, "A1").normalizer_quotient.name() == "W(B3)");
  CHECK(find_levi(f4, "~A1").normalizer_quotient.name() == "W(B3)");
  CHECK_THROWS_AS(levi_classes(CartanType::parse("B4")), TypeError);

  for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) {
    const auto& cls = levi_classes(CartanType::parse(t));
    std::vector<std::string> n = names(CartanType::parse(t));
    std::sort(n.begin(), n.end());
    CHECK(std::adjacent_find(n.begin(), n.end()) == n.end());
    for (const auto& c : cls)
      CHECK(c.normalizer_quotient.order() == c.normalizer_quotient_order);
  }
}

TEST_CASE("tabulated quotients agree with the root system") {
  for (const char* t : {"G2", "F4", "E6", "E7", "E8"})
    for (const HowlettCheck& h : verify_howlett(CartanType::parse(t))) {
      CHECK_MESSAGE(h.order_ok, t, " ", h.levi);
      if (h.checked_by_enumeration) CHECK_MESSAGE(h.stats_ok, t, " ", h.levi);
    }
}

TEST_CASE("Sylow classes") {
  CHECK(sylow_class(CartanType::parse("E6"), 2).name == "D5");
  CHECK(sylow_class(CartanType::parse("E7"), 3).name == "E6");
  CHECK(sylow_class(CartanType::parse("E8"), 7).name == "A6");
  CHECK(sylow_class(CartanType::parse("E8"), 11).name == "T");
  CHECK(sylow_class_formula({Family::B, 7}, 3) == CartanType::parse("2A2"));
  CHECK(sylow_class_formula({Family::A, 8}, 3) == CartanType::parse("A8"));
  CHECK(sylow_class_formula({Family::B, 4}, 2) == CartanType::parse("B4"));

  for (const char* t : {"G2", "F4", "E6", "E7", "E8"}) {
    const CartanType g = CartanType::parse(t);
    for (std::uint64_t l : {2, 3, 5, 7, 11, 13}) {
      const SylowClass s = sylow_class(g, l);
      CHECK(l_valuation(weyl_order(s.type), l) == l_valuation(weyl_order(g), l));
      if (weyl_order(g) % l != 0) CHECK(s.name == "T");
      // Idempotent: the Sylow class of the Levi is the Levi itself.
      for (const SimpleType& f : s.type.factors()) {
        const CartanType again = sylow_class_search(CartanType({f}), l).type;
        CHECK(again == CartanType({f}));
      }
    }
  }
  // The formula and the search agree for classical types of rank up to 8.
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const int lo = f == Family::C ? 3 : f == Family::D ? 4 : f == Family::B ? 2 : 1;
    for (int n = lo; n <= 8; ++n)
      for (std::uint64_t l : {2, 3, 5, 7}) {
        const SimpleType st{f, n};
        CHECK_MESSAGE(sylow_class_search(CartanType({st}), l).type == sylow_class_formula(st, l), st.name(), " l=", l);
      }
  }
}

TEST_CASE("regular orbit cuspidality and minimal cuspidal Levis") {
  CHECK(oreg_is_cuspidal(CartanType::parse("G2"), 2));
  CHECK_FALSE(oreg_is_cuspidal(CartanType::parse("E6"), 2));
  CHECK(oreg_is_cuspidal(CartanType::parse("E8"), 5));
  CHECK_FALSE(oreg_is_cuspidal(CartanType::parse("E7"), 3));

  const LeviClass& e6 = minimal_cuspidal_levi(CartanType::parse("E6"), CentralCharacter::Nontrivial);
  CHECK(e6.name == "2A2");
  CHECK(e6.normalizer_quotient.name() == "W(G2)");
  const LeviClass& e7 = minimal_cuspidal_levi(CartanType::parse("E7"), CentralCharacter::Nontrivial);
  CHECK(e7.name == "(3A1)''");
  CHECK(e7.normalizer_quotient.name() == "W(F4)");
  const LeviClass& f4 = minimal_cuspidal_levi(CartanType::parse("F4"), CentralCharacter::Trivial);
  CHECK(f4.name == "T");
  CHECK(f4.normalizer_quotient.name() == "W(F4)");
  CHECK_THROWS_AS(minimal_cuspidal_levi(CartanType::parse("F4"), CentralCharacter::Nontrivial), ArgumentError);
}

TEST_CASE("Sylow-Levi quotient classes equal l-singular classes") {
  const std::tuple<const char*, std::uint64_t, std::size_t> points[] = {
      {"E6", 5, 2}, {"E7", 5, 6}, {"E7", 7, 2}, {"E8", 7, 4}};
  for (const auto& [t, l, n] : points) {
    const CartanType g = CartanType::parse(t);
    const LeviClass& levi = find_levi(g, sylow_class(g, l).name);
    CHECK(class_stats(levi.normalizer_quotient).num_classes() == n);
    CHECK(count_l_singular(GroupSpec::weyl(g), l) == n);
  }
}
