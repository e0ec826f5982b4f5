#pragma once

#include <cstdint>
#include <vector>

#include "caforge/field.hpp"
#include "caforge/group.hpp"

namespace caforge {

// 2x2 matrices over GF(q) packed ((a*q + b)*q + c)*q + d, so code order is
// lexicographic order on (a, b, c, d).
struct Mat2 {
  fe a, b, c, d;
};

ecode pack_mat(const Field& f, Mat2 m);
Mat2 unpack_mat(const Field& f, ecode c);
fe mat_det(const Field& f, ecode c);
fe mat_trace(const Field& f, ecode c);
ecode mul_mat(const Field& f, ecode x, ecode y);

// Projective normal form of a determinant-1 matrix: of the pair {M, -M} the
// one with the smaller packed code (equivalently, whose first nonzero entry
// has the smaller field code). Identity map in characteristic 2. Throws
// inconsistency_error if the determinant is not 1.
ecode canonical_mat(const Field& f, ecode c);

class SL2Ops final : public ElementOps {
 public:
  explicit SL2Ops(FieldPtr f);
  const Field& field() const { return *f_; }
  ecode mul(ecode x, ecode y) const override;
  ecode inv(ecode x) const override;

 private:
  FieldPtr f_;
};

class PSL2Ops final : public ElementOps {
 public:
  explicit PSL2Ops(FieldPtr f);
  const Field& field() const { return *f_; }
  ecode mul(ecode x, ecode y) const override;
  ecode inv(ecode x) const override;

 private:
  FieldPtr f_;
};

// Full groups, enumerated in ascending code order by solving the determinant
// equation; generators are diag(g, 1/g) for g a primitive root, the unit
// upper shear, and the antidiagonal involution.
Group sl2(FieldPtr f);
Group psl2(FieldPtr f);

// Image of the upper-triangular subgroup in PSL(2,q); order q(q-1)/gcd(2,q-1).
Group borel_psl2(FieldPtr f);

// Canonical codes of the copy of PSL(2,p^n) inside PSL(2,p^m) whose matrix
// entries lie in the order-p^n subfield; requires n | m.
std::vector<ecode> psl2_subfield_carrier(const Field& f, std::uint32_t n);

// Canonical codes of the copy of PGL(2,p^n) inside PSL(2,p^m): subfield
// matrices of square or non-square determinant, rescaled to determinant 1.
// Requires p odd and m/n even (so subfield scalars are squares upstairs).
std::vector<ecode> pgl2_subfield_carrier(const Field& f, std::uint32_t n);

}  // namespace caforge
