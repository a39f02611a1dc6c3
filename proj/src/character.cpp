#include "springer/character.hpp"

#include "springer/error.hpp"

namespace springer {

CentralCharacter parse_character(std::string_view text) {
  if (text == "trivial" || text == "1") return CentralCharacter::Trivial;
  if (text == "nontrivial" || text == "chi") return CentralCharacter::Nontrivial;
  throw ArgumentError("unknown central character: " + std::string(text));
}

std::string character_name(CentralCharacter chi) {
  return chi == CentralCharacter::Trivial ? "trivial" : "nontrivial";
}

int center_order(const CartanType& g) {
  if (!g.is_irreducible()) throw ArgumentError("central characters need a quasi-simple type");
  const SimpleType& t = g.simple();
  if (t.family == Family::E && t.rank == 6) return 3;
  if (t.family == Family::E && t.rank == 7) return 2;
  if (t.family == Family::A) return t.rank + 1;
  if (t.family == Family::B || t.family == Family::C) return 2;
  if (t.family == Family::D) return 4;
  return 1;
}

bool character_valid(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  if (chi == CentralCharacter::Trivial) return true;
  const int z = center_order(g);
  if (z == 1) return false;
  // Characters of Z with values in a field of characteristic l factor
  // through the l'-part, which is trivial when z is a power of l.
  std::uint64_t rest = static_cast<std::uint64_t>(z);
  while (rest % l == 0) rest /= l;
  return rest > 1;
}

void require_valid_character(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_prime(l);
  if (!character_valid(g, l, chi))
    throw InvalidCharacterError("no nontrivial central character for " + g.name() + " in characteristic " +
                                std::to_string(l));
}

}  // namespace springer
