#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "springer/perm.hpp"

namespace springer {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One irreducible factor of a Cartan type.
struct SimpleType {
  Family family;
  int rank;

  std::string name() const;
  bool is_classical() const;
  auto operator<=>(const SimpleType&) const = default;
};

// A product of irreducible Cartan types, kept sorted so equality is structural.
// The empty product is the type of a torus.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<SimpleType> factors);
  CartanType(Family f, int rank) : CartanType(std::vector<SimpleType>{{f, rank}}) {}

  // Accepts "E6", "B3", "A2+A1", "2A2+A1", "A2xA1", and "T" or "" for the torus.
  static CartanType parse(std::string_view text);

  const std::vector<SimpleType>& factors() const { return factors_; }
  int rank() const;
  bool is_irreducible() const { return factors_.size() == 1; }
  bool is_torus() const { return factors_.empty(); }
  bool is_exceptional() const;
  const SimpleType& simple() const;
  std::string name() const;

  bool operator==(const CartanType&) const = default;
  auto operator<=>(const CartanType&) const = default;

 private:
  std::vector<SimpleType> factors_;
};

void validate(const SimpleType& t);

// Fundamental degrees of the Weyl group.
std::vector<int> degrees(const SimpleType& t);
std::uint64_t weyl_order(const SimpleType& t);
std::uint64_t weyl_order(const CartanType& t);

bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t l);
int l_valuation(std::uint64_t n, std::uint64_t l);
// Little-endian base-l digits of n, most significant digit nonzero.
std::vector<int> base_l_digits(std::uint64_t n, std::uint64_t l);

// Root system in simple-root coordinates. Node i of the Bourbaki diagram is
// index i-1. Roots are indexed positives first (by height, then
// lexicographically), then the negatives in the same order, so the simple root
// alpha_i has index i and the negative of root r < N is r + N.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return npos_; }

  // cartan(i, j) = <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // Squared length of alpha_i, scaled so that every value is an even integer.
  int squared_length(int i) const { return sqlen_[i]; }
  bool is_short(int i) const;

  const std::vector<int>& root(int r) const { return roots_[r]; }
  int find(const std::vector<int>& coeffs) const;
  bool is_positive(int r) const { return r < npos_; }
  int negate(int r) const { return r < npos_ ? r + npos_ : r - npos_; }
  int height(int r) const;
  // Index of r + t, or -1 if it is not a root.
  int add(int r, int t) const { return add_[r * num_roots() + t]; }
  // <r, alpha_j^vee>.
  int pairing(int r, int j) const;
  // Symmetric form (r, t) in the same scaling as squared_length.
  int inner(int r, int t) const;

  const Perm& reflection(int j) const { return reflections_[j]; }
  const std::vector<Perm>& reflections() const { return reflections_; }
  // Reflection in an arbitrary root, as a permutation of the roots.
  Perm reflection_of_root(int r) const;
  // The permutation of all roots of the element w with w(alpha_i) = images[i].
  Perm extend_from_simple_images(const std::vector<int>& images) const;

  // Root indices of the subsystem spanned by the simple roots in J.
  std::vector<int> subsystem_roots(const std::vector<int>& J) const;
  // Connected components of the Dynkin subdiagram on J (each sorted).
  std::vector<std::vector<int>> components(const std::vector<int>& J) const;
  // Cartan type of one connected subdiagram.
  SimpleType component_type(const std::vector<int>& comp) const;
  CartanType subdiagram_type(const std::vector<int>& J) const;

 private:
  CartanType type_;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sqlen_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::int16_t> add_;
  std::vector<Perm> reflections_;
  // For each positive non-simple root r: r = parent_[r] + alpha_{step_[r]}.
  std::vector<int> parent_;
  std::vector<int> step_;
};

}  // namespace springer
