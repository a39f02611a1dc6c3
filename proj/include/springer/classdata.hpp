#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/rootsys.hpp"
#include "springer/weylgrp.hpp"

namespace springer {

// Symbolic finite group. Text form:
//   1          trivial group
//   C<n>       cyclic group of order n
//   S<n>       symmetric group on n letters
//   W(X)       Weyl group of an irreducible Cartan type X
//   Wr2(H)     H^2 semidirect S2, the swap action
//   A x B      direct product
class GroupSpec {
 public:
  enum class Kind { Trivial, Cyclic, Sym, Weyl, Wreath2, Product, Explicit };

  GroupSpec() = default;
  static GroupSpec trivial();
  static GroupSpec cyclic(int n);
  static GroupSpec sym(int n);
  static GroupSpec weyl(const CartanType& t);
  static GroupSpec wreath2(GroupSpec h);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec explicit_perm(PermGroup g, std::string label);
  static GroupSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const SimpleType& weyl_type() const { return weyl_; }
  const std::vector<GroupSpec>& children() const { return children_; }
  const PermGroup* perm_group() const { return perm_.get(); }

  std::uint64_t order() const;
  std::string name() const;

  bool operator==(const GroupSpec& o) const { return name() == o.name(); }

 private:
  // Flattens products, drops trivial factors, rewrites W(A_{n-1}) as S<n> and
  // C2 as S2, and sorts factors.
  static GroupSpec normalized(GroupSpec g);

  Kind kind_ = Kind::Trivial;
  int n_ = 1;
  SimpleType weyl_{Family::A, 1};
  std::vector<GroupSpec> children_;
  std::shared_ptr<const PermGroup> perm_;
  std::string label_;
};

// Multiset of (element order, class size), kept sorted.
struct ClassStats {
  std::uint64_t group_order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::size_t num_classes() const { return entries.size(); }
  void normalize();
  bool operator==(const ClassStats&) const = default;
};

ClassStats class_stats(const GroupSpec& g);
ClassStats class_stats_from_table(const RawClassTable& t);
std::size_t count_l_regular(const GroupSpec& g, std::uint64_t l);
std::size_t count_l_singular(const GroupSpec& g, std::uint64_t l);
std::size_t count_l_regular(const ClassStats& s, std::uint64_t l);

// Combinatorial class statistics of the classical families.
ClassStats sym_class_stats(int n);
ClassStats hyperoctahedral_class_stats(int n);  // W(B_n) = W(C_n)
ClassStats type_d_class_stats(int n);
ClassStats wreath2_class_stats(const ClassStats& h);
ClassStats product_class_stats(const ClassStats& a, const ClassStats& b);

// The curated W(E8) table, checksum-verified.
const ClassStats& e8_class_stats();

// Integer partitions of n in non-increasing order, listed in reverse
// lexicographic order.
std::vector<std::vector<int>> partitions(int n);

}  // namespace springer
