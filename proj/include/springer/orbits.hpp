#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "springer/character.hpp"
#include "springer/classdata.hpp"
#include "springer/rootsys.hpp"

namespace springer {

struct NilpotentOrbit {
  std::string label;         // Bala-Carter label, "0" for the zero orbit
  GroupSpec a_bar;           // component group in the adjoint group
  bool has_central_factor;   // A_G(x) = a_bar x Z(G)
  bool distinguished;
};

// Exceptional types only; in the order of increasing dimension.
const std::vector<NilpotentOrbit>& orbit_table(const CartanType& g);
const NilpotentOrbit& find_orbit(const CartanType& g, const std::string& label);

// Irreducible representations of a component group (trivial or S_n).
// Ordinary names: "triv", "eps", "chi<partition>". Modular names: "triv",
// "eps" for the sign, "phi<partition>" for James' D^lambda otherwise.
std::vector<std::string> ordinary_irreps(const GroupSpec& a);
std::vector<std::string> modular_irreps(const GroupSpec& a, std::uint64_t l);
// l-regular partitions of n, and the l-regularization of a partition.
std::vector<std::vector<int>> l_regular_partitions(int n, std::uint64_t l);
std::vector<int> l_regularization(const std::vector<int>& lambda, std::uint64_t l);

// The injection from modular into ordinary irreducibles of a component group.
// Identity on names for l not dividing the order; tabulated for S2 and S3
// otherwise. Throws DataError where no map is known.
std::string beta_image(const GroupSpec& a, std::uint64_t l, const std::string& modular);
// Inverse of beta_image; nullopt when the ordinary irreducible is not an image.
std::optional<std::string> beta_preimage(const GroupSpec& a, std::uint64_t l, const std::string& ordinary);
// Order on ordinary irreducibles of a component group: smaller <= larger.
bool local_system_leq(const GroupSpec& a, std::uint64_t l, const std::string& smaller,
                      const std::string& larger);
// Modular reduction of a one-dimensional ordinary irreducible.
std::string reduce_linear(const GroupSpec& a, std::uint64_t l, const std::string& ordinary);

// Central character after reduction mod l: characters of order a power of l
// become trivial.
CentralCharacter reduce_character(const CartanType& g, std::uint64_t l, CentralCharacter chi);

struct PairLabel {
  std::string orbit;
  std::string local_system;  // name of an irreducible of a_bar
  CentralCharacter character = CentralCharacter::Trivial;

  // "(E6(a3),triv x chi)", "(2A2,chi)", "(G2(a1),phi21)".
  std::string text() const;
  auto operator<=>(const PairLabel&) const = default;
};

// All pairs over a field of characteristic l with central character chi.
std::vector<PairLabel> pairs(const CartanType& g, std::uint64_t l, CentralCharacter chi);
std::size_t pairs_count(const CartanType& g, std::uint64_t l, CentralCharacter chi);

// Number of cuspidal pairs of a quasi-simple classical group (trivial central
// character) in characteristic l. Only ranks up to 8 are supported.
int classical_cuspidal_count(const SimpleType& t, std::uint64_t l);
// The distinguished partitions behind classical_cuspidal_count for B/C/D at
// l = 2, largest first.
std::vector<std::vector<int>> classical_distinguished_partitions(const SimpleType& t);

struct ClosureGraph {
  std::vector<std::string> orbits;                          // table order
  std::vector<std::pair<std::string, std::string>> edges;  // (larger, smaller)

  // Whether smaller lies in the closure of larger (reflexive).
  bool contains(const std::string& larger, const std::string& smaller) const;
  bool covers(const std::string& orbit) const;
};
const ClosureGraph& closure_graph(const CartanType& g);

// The minimal distinguished orbits in the closure graph restricted to
// distinguished orbits.
std::vector<std::string> minimal_distinguished_orbits(const CartanType& g);

}  // namespace springer
