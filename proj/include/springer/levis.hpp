#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/character.hpp"
#include "springer/classdata.hpp"
#include "springer/rootsys.hpp"

namespace springer {

// A W-conjugacy class of standard parabolic subsystems, found from the
// simple-root subsets alone.
struct LeviCandidate {
  std::string name;                 // "T", "A1+~A1", "(3A1)''", "E7"
  CartanType type;                  // semisimple type of the Levi
  std::vector<int> simple_roots;    // smallest representative subset (0-based)
  std::vector<std::vector<int>> conjugates;
  std::uint64_t normalizer_quotient_order = 1;
  int semisimple_rank() const { return type.rank(); }
};

// Connected components of a simple-root subset in the order used by Levi
// names: E, F, G, D, C, B, A, larger rank first, long roots before short.
struct LeviComponent {
  SimpleType type;
  bool tilde = false;  // A-type component of short roots in G2 or F4
  std::vector<int> nodes;
};
std::vector<LeviComponent> levi_components(const RootSystem& rs, const std::vector<int>& J);

// Every class, ordered by semisimple rank then name. The name marks short
// root components of G2/F4 with "~" and separates the two E7 classes of the
// same type by "'" (meets the E6 subdiagram) and "''" (does not).
std::vector<LeviCandidate> enumerate_levi_classes(const RootSystem& rs);

struct LeviClass : LeviCandidate {
  GroupSpec normalizer_quotient;  // N_G(L)/L as a symbolic group
  // Whether L contains a conjugate of the minimal Levi carrying cuspidal data
  // with nontrivial central character (E6 and E7 only).
  bool supports_nontrivial_character = false;
};

// Levi classes of an exceptional type with their tabulated quotient groups.
// Cached; throws TypeError for classical or reducible types.
const std::vector<LeviClass>& levi_classes(const CartanType& g);
const LeviClass& find_levi(const CartanType& g, const std::string& name);

struct HowlettCheck {
  std::string levi;
  std::string spec;
  bool order_ok = false;
  bool checked_by_enumeration = false;  // false when W' exceeds the budget
  bool stats_ok = false;
};
// Compares every tabulated quotient with the group W' computed from the
// root system: orders always, class statistics when enumeration fits.
std::vector<HowlettCheck> verify_howlett(const CartanType& g);

// Smallest Levi containing a Sylow l-subgroup of W.
struct SylowClass {
  CartanType type;
  std::string name;      // Levi class name for exceptional types, else the type
  bool whole_group = false;
};
// Search over simple-root subsets; works for any type.
SylowClass sylow_class_search(const CartanType& g, std::uint64_t l);
// Base-l digit formula for the classical types.
CartanType sylow_class_formula(const SimpleType& t, std::uint64_t l);
// Formula for classical types, search for exceptional ones.
SylowClass sylow_class(const CartanType& g, std::uint64_t l);
// Symbolic classical entry: "G" for the whole group, else the digit formula.
std::string sylow_formula_text(Family f, std::uint64_t l);

// Whether the regular orbit with trivial local system is l-cuspidal, i.e.
// the Sylow class is the whole group.
bool oreg_is_cuspidal(const CartanType& g, std::uint64_t l);

// Minimal Levi supporting a cuspidal pair in characteristic 0 with central
// character chi: the torus for chi trivial. Throws ArgumentError for a
// nontrivial chi on a type with trivial centre.
const LeviClass& minimal_cuspidal_levi(const CartanType& g, CentralCharacter chi);

}  // namespace springer
