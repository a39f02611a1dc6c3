#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/character.hpp"
#include "springer/classdata.hpp"
#include "springer/cuspidal.hpp"
#include "springer/orbits.hpp"

namespace springer {

struct DecompositionRow {
  std::string ordinary;  // ordinary character of the relative Weyl group
  PairLabel char0;       // its pair in characteristic 0
  std::vector<int> entries;
};

// A decomposition matrix of a relative Weyl group, rows in table order.
// Reading the rows upwards refines the order on pairs.
struct DecompositionMatrix {
  std::string id;  // "E6.l2.chi", "E6.l3.2A2", "E7.l2.3A1", "E7.l3.chi"
  CartanType type;
  std::uint64_t l = 0;
  CentralCharacter character = CentralCharacter::Trivial;  // of the characteristic-0 pairs
  std::string levi;
  GroupSpec group;
  bool partial = false;  // only the first rows are known
  std::vector<std::string> columns;
  std::vector<DecompositionRow> rows;
};

// Parses the grid format of data/decomposition/*.txt (without checksum line).
DecompositionMatrix parse_decomposition_matrix(std::string_view text);
std::vector<std::string> decomposition_matrix_ids();
const DecompositionMatrix& decomposition_matrix(const std::string& id);

struct BasicSetResult {
  std::vector<std::size_t> beta;         // column -> row index
  std::vector<PairLabel> modular_series;  // column -> modular pair
  // Nonzero entries below the chosen row, checked against the closure order.
  std::size_t order_checked = 0;
  std::vector<std::string> order_uncovered;  // "column: row" where no relation is recorded
};

// For each column the topmost nonzero row, which must hold a 1, and must be
// different for different columns. Throws DataError otherwise, or when a
// nonzero row provably lies above the chosen one.
BasicSetResult basic_set(const DecompositionMatrix& dm);

// The fourteen pairs of the ((3A1)'',chi) series of E7 in characteristic 3.
std::vector<PairLabel> full_e7_chi_series();

enum class SeriesStatus { Determined, Expected, Undetermined };
std::string series_status_name(SeriesStatus s);

struct PictureSeries {
  std::optional<CuspidalDatum> datum;  // empty for the cuspidal pairs of G
  std::size_t size = 0;
  SeriesStatus status = SeriesStatus::Undetermined;
  std::vector<PairLabel> members;  // complete unless undetermined
  std::string source;              // "table E6.l3.2A2", "data", "complement", "cuspidal"

  std::string label() const;  // datum text or "cuspidal"
};

struct CorrespondencePicture {
  CartanType type;
  std::uint64_t l = 0;
  CentralCharacter chi = CentralCharacter::Trivial;
  std::vector<PictureSeries> series;

  bool complete() const;
};

// Partition of the pairs into induction series as far as it is known.
CorrespondencePicture correspondence_picture(const CartanType& g, std::uint64_t l, CentralCharacter chi);

// Bala-Carter Levi of an orbit: the label without (a_i)/(b_i) decorations,
// "T" for the zero orbit.
std::string bala_carter_levi(const std::string& orbit);
// Whether a Levi of class `larger` contains a conjugate of one of class `smaller`.
bool levi_contains(const CartanType& g, const std::string& larger, const std::string& smaller);

}  // namespace springer
