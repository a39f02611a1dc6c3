#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/character.hpp"
#include "springer/classdata.hpp"
#include "springer/levis.hpp"
#include "springer/orbits.hpp"

namespace springer {

enum class PairStatus { Proven, Conjectural, Unresolved };
std::string status_name(PairStatus s);

// A cuspidal pair of a Levi subgroup: (L, orbit of L, local system).
struct CuspidalDatum {
  std::string levi;          // Levi class name; the ambient type for cuspidal pairs of G
  std::string orbit;         // "0", "[7,1] x [2]", "[2]^3", "E7(a5)"
  std::string local_system;  // "triv", "eps", "chi", ...
  CentralCharacter character = CentralCharacter::Trivial;

  // "(D4+A1,[7,1] x [2],triv)"
  std::string text() const;
  bool operator==(const CuspidalDatum&) const = default;
};

struct SeriesRecord {
  CuspidalDatum datum;
  GroupSpec quotient;  // N_G(L)/L
  std::size_t size = 0;
  PairStatus status = PairStatus::Proven;
};

struct CuspidalEntry {
  PairStatus status = PairStatus::Proven;
  PairLabel pair;                     // unset for unresolved slots
  std::vector<PairLabel> candidates;  // unresolved slots only

  std::string text() const;
};

struct CuspidalReport {
  std::size_t count = 0;
  std::vector<CuspidalEntry> entries;  // known pairs first, then open slots

  std::vector<PairLabel> known_pairs() const;
  std::size_t unresolved_slots() const;
};

struct InductionTable {
  CartanType type;
  std::uint64_t l = 0;
  CentralCharacter chi = CentralCharacter::Trivial;
  std::vector<SeriesRecord> series;  // proper Levis, in Levi order
  CuspidalReport cuspidal;
  std::size_t total = 0;             // pairs_count
};

// Series sizes from the Levi classes and their cuspidal data; the cuspidal
// count is what remains of pairs_count. Memoized.
const InductionTable& induction_table(const CartanType& g, std::uint64_t l, CentralCharacter chi);
std::size_t cuspidal_count(const CartanType& g, std::uint64_t l, CentralCharacter chi);
const CuspidalReport& classify_cuspidal_pairs(const CartanType& g, std::uint64_t l, CentralCharacter chi);

// Cuspidal data of one Levi class with the given central character.
std::vector<std::pair<CuspidalDatum, PairStatus>> levi_cuspidal_data(const CartanType& g, const LeviClass& levi,
                                                                     std::uint64_t l, CentralCharacter chi);

// Prime conditions for a quasi-simple simply connected group.
bool good_prime(const CartanType& g, std::uint64_t l);
bool very_good_prime(const CartanType& g, std::uint64_t l);
bool rather_good(const CartanType& g, std::uint64_t l);  // l divides no |A_G(x)|
bool easy(const CartanType& g, std::uint64_t l);         // l does not divide |W|
// Condition on the coefficient field for the simply connected group.
std::string big_enough_condition(const CartanType& g);

}  // namespace springer
