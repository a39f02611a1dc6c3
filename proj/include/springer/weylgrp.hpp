#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/perm.hpp"
#include "springer/rootsys.hpp"

namespace springer {

// Permutation group with a stabilizer chain. Elements are numbered
// 0..order()-1 by their transversal digits, most significant level first,
// and element(i) = u_0 * u_1 * ... * u_{k-1}.
class PermGroup {
 public:
  PermGroup() = default;
  // base_hint points are tried first as base points, in the given order.
  PermGroup(int degree, std::vector<Perm> generators, const std::vector<int>& base_hint = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  std::vector<int> base() const;
  std::vector<int> transversal_sizes() const;

  bool contains(const Perm& p) const;
  Perm element(std::uint64_t index) const;
  std::uint64_t index_of(const Perm& p) const;

  // Walks every element; f receives a Cursor that can evaluate the element on
  // single points without building the whole permutation.
  class Cursor {
   public:
    int apply(int point) const {
      for (int l = static_cast<int>(ptrs_.size()) - 1; l >= 0; --l) point = ptrs_[l][point];
      return point;
    }
    std::uint64_t index() const { return index_; }
    Perm perm() const;

   private:
    friend class PermGroup;
    std::vector<const Point*> ptrs_;
    std::uint64_t index_ = 0;
    int degree_ = 0;
  };
  template <class F>
  void for_each(F&& f) const;

  // Index of the element whose values on the base points are `images`, or
  // UINT64_MAX if no element of the group has them. `images` is clobbered.
  std::uint64_t index_from_base_images(std::vector<int>& images) const;
  void set_cursor(Cursor& c, std::uint64_t index) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> pos;  // point -> position in orbit, or -1
    std::vector<Perm> trans;
    std::vector<Perm> trans_inv;
  };
  void compute_orbit(Level& lv) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, int> strip(Perm h, int from) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

template <class F>
void PermGroup::for_each(F&& f) const {
  Cursor c;
  c.degree_ = degree_;
  const int k = static_cast<int>(levels_.size());
  std::vector<int> digits(k, 0);
  c.ptrs_.resize(k);
  for (int l = 0; l < k; ++l) c.ptrs_[l] = levels_[l].trans[0].data();
  for (std::uint64_t i = 0; i < order_; ++i) {
    c.index_ = i;
    f(static_cast<const Cursor&>(c));
    for (int l = k - 1; l >= 0; --l) {
      if (++digits[l] < static_cast<int>(levels_[l].orbit.size())) {
        c.ptrs_[l] = levels_[l].trans[digits[l]].data();
        break;
      }
      digits[l] = 0;
      c.ptrs_[l] = levels_[l].trans[0].data();
    }
  }
}

struct RawClass {
  Perm representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

struct RawClassTable {
  std::uint64_t group_order = 0;
  std::vector<RawClass> classes;
};

// Largest group order accepted by brute force. Read from SPRINGER_ENUM_BUDGET
// (default 4000000) unless overridden.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t budget);
void require_within_budget(std::uint64_t order, const std::string& what);

// Full class partition by conjugation orbits of the generators. Classes are
// sorted by (element order, size, smallest element index).
RawClassTable conjugacy_classes_bruteforce(const PermGroup& g);

// Weyl group acting on the roots, with the simple roots as base.
PermGroup group_from_type(const RootSystem& rs);
PermGroup parabolic_subgroup(const RootSystem& rs, const std::vector<int>& J);
// Longest element of W_J as a permutation of all roots.
Perm longest_element(const RootSystem& rs, const std::vector<int>& J);

// The subsets of simple roots W-conjugate to J, and the complement
// W' = {w : w(J) = J}, which is isomorphic to N_W(W_J)/W_J. Both come from the
// groupoid whose arrows are w_{K+s} w_K : K -> K'.
struct ParabolicNormalizer {
  std::vector<int> J;
  std::vector<std::vector<int>> conjugates;
  PermGroup complement;
};
ParabolicNormalizer parabolic_normalizer(const RootSystem& rs, const std::vector<int>& J);
RawClassTable normalizer_quotient_classes(const RootSystem& rs, const std::vector<int>& J);
// |N_W(W_J)| by testing every element of W; needs |W| within budget.
std::uint64_t normalizer_order_bruteforce(const RootSystem& rs, const PermGroup& w,
                                          const std::vector<int>& J);
// Whether some element of W maps Phi_J onto Phi_K, by exhaustive search.
bool parabolics_conjugate_bruteforce(const RootSystem& rs, const PermGroup& w,
                                     const std::vector<int>& J, const std::vector<int>& K);

}  // namespace springer
