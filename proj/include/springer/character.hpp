#pragma once

#include <string>
#include <string_view>

#include "springer/rootsys.hpp"

namespace springer {

// Central character of a local system. For E6 the two nontrivial characters
// are inverse to each other and are treated as one kind.
enum class CentralCharacter { Trivial, Nontrivial };

CentralCharacter parse_character(std::string_view text);  // "trivial" or "nontrivial"
std::string character_name(CentralCharacter chi);

// Order of Z(G)/Z(G)° for the simply connected group: 3 for E6, 2 for E7,
// 1 for the other exceptional types.
int center_order(const CartanType& g);

// Throws InvalidCharacterError if chi cannot occur for (G, l): a nontrivial
// character needs a nontrivial centre whose order is prime to l.
void require_valid_character(const CartanType& g, std::uint64_t l, CentralCharacter chi);
bool character_valid(const CartanType& g, std::uint64_t l, CentralCharacter chi);

}  // namespace springer
