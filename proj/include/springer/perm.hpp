#pragma once

#include <cstdint>
#include <vector>

namespace springer {

// A permutation of {0, ..., n-1} with n <= 256, stored as its image list.
using Point = std::uint8_t;
using Perm = std::vector<Point>;

Perm identity_perm(int n);
// Function composition: (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);
// Order of a permutation: lcm of its cycle lengths.
std::uint64_t perm_order(const Perm& a);

}  // namespace springer
