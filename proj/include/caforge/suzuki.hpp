#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "caforge/field.hpp"
#include "caforge/group.hpp"

namespace caforge {

// Point stabilizer of the rank-one twisted group of Lie type over
// GF(r), r = 2^(2n+1). Elements are triples (lambda, a, b) with lambda
// nonzero, coded (lambda * r + a) * r + b. Multiplication twists the
// two-sided entries through theta: x -> x^(2^(n+1)), the square root of the
// Frobenius square (theta(theta(x)) = x^(2r)).
class SuzukiOps final : public ElementOps {
 public:
  SuzukiOps(FieldPtr f, std::uint32_t n);
  const Field& field() const { return *f_; }
  std::uint64_t r() const { return f_->q(); }
  fe theta(fe x) const;
  ecode pack(fe lambda, fe a, fe b) const;
  void unpack(ecode c, fe& lambda, fe& a, fe& b) const;
  ecode mul(ecode x, ecode y) const override;
  ecode inv(ecode x) const override;

 private:
  FieldPtr f_;
  std::uint32_t n_;
};

// The full stabilizer, order r^2 (r-1). Requires n >= 1.
Group suzuki_point_stabilizer(std::uint32_t n);

struct SuzukiLemmaReport {
  std::uint32_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t order = 0;
  std::uint64_t degree = 0;  // r^2 + 1, the permutation degree upstairs
  std::uint64_t kernel_order = 0;
  std::uint64_t kernel_center_order = 0;
  std::uint64_t kernel_exponent = 0;
  bool kernel_non_abelian = false;
  bool kernel_center_expected = false;  // center is exactly {(1, 0, b)}
  std::optional<std::pair<ecode, ecode>> kernel_witness;
  std::uint64_t complement_order = 0;
  bool complement_cyclic = false;
  bool stabilizer_ca = true;
  bool ok = false;
};

// Checks the Frobenius shape of the stabilizer: non-abelian kernel of order
// r^2 and exponent 4, cyclic complement of order r-1, and failure of the
// centralizer-abelian property.
SuzukiLemmaReport verify_suzuki_lemma(std::uint32_t n);

}  // namespace caforge
