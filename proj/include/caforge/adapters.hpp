#pragma once

#include <cstdint>
#include <vector>

#include "caforge/group.hpp"

namespace caforge {

// Permutations of [0, degree), images packed base degree, point 0 in the
// least significant digit. Degree is capped at 15 so codes fit 64 bits.
class PermOps final : public ElementOps {
 public:
  explicit PermOps(std::uint32_t degree);
  std::uint32_t degree() const { return d_; }
  ecode pack(const std::vector<std::uint32_t>& images) const;
  std::vector<std::uint32_t> unpack(ecode c) const;
  ecode identity() const { return id_; }
  ecode mul(ecode a, ecode b) const override;  // (a*b)(i) = a(b(i))
  ecode inv(ecode a) const override;

 private:
  std::uint32_t d_;
  ecode id_;
};

// Explicit multiplication table for groups enumerated 0..n-1 with identity 0.
class TableOps final : public ElementOps {
 public:
  // table[a*n + b] = a*b; validated for identity and inverses.
  TableOps(std::uint32_t n, std::vector<std::uint32_t> table);
  std::uint32_t size() const { return n_; }
  ecode mul(ecode a, ecode b) const override;
  ecode inv(ecode a) const override;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

// Rotation codes [0, n), reflection codes [n, 2n).
class DihedralOps final : public ElementOps {
 public:
  explicit DihedralOps(std::uint32_t n);
  ecode mul(ecode a, ecode b) const override;
  ecode inv(ecode a) const override;

 private:
  std::uint32_t n_;
};

class CyclicOps final : public ElementOps {
 public:
  explicit CyclicOps(std::uint32_t n);
  ecode mul(ecode a, ecode b) const override;
  ecode inv(ecode a) const override;

 private:
  std::uint32_t n_;
};

// Pairs (a, b) coded a*b_mod + b.
class ProductOps final : public ElementOps {
 public:
  ProductOps(OpsPtr a, OpsPtr b, ecode b_mod);
  ecode pack(ecode a, ecode b) const { return a * b_mod_ + b; }
  ecode mul(ecode x, ecode y) const override;
  ecode inv(ecode x) const override;

 private:
  OpsPtr a_, b_;
  ecode b_mod_;
};

// Closure of explicit generator permutations given in image form.
Group perm_group(std::uint32_t degree,
                 const std::vector<std::vector<std::uint32_t>>& gens,
                 std::string label = "");

Group sym(std::uint32_t n);
Group alt(std::uint32_t n);
Group cyclic(std::uint32_t n);
Group dihedral(std::uint32_t order);  // order = 2n, n >= 2
Group quaternion8();

// Frobenius group of order 20 inside Sym(5).
Group frobenius20();

// Two copies of Sym(3) on {0,1,2} and {3,4,5} plus the swap; order 72.
Group sym3_wreath_c2();

// Affine maps x -> Ax + t on GF(3)^2 with A in the quaternion subgroup of
// GL(2,3); Frobenius of order 72 with non-abelian complement.
Group frobenius72_q8();

// GL(2,3) acting on the 8 nonzero vectors of GF(3)^2.
Group gl2_3();

// Direct product with pair packing; both factors must have code range below
// the given moduli.
Group direct_product(const Group& a, const Group& b, std::string label = "");

}  // namespace caforge
