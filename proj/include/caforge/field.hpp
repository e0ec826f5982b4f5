#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace caforge {

// Field element code. Codes the coefficient vector of a residue polynomial
// in base p, constant term in the least significant digit, so codes run
// through [0, q) and code order is the canonical element order.
using fe = std::uint32_t;

inline constexpr std::uint32_t kDefaultFieldBound = 1u << 20;

// Full q*q lookup tables are built at or below this size; larger fields use
// on-the-fly polynomial arithmetic.
inline constexpr std::uint32_t kFieldTableLimit = 4096;

// GF(p^m). The modulus is the first irreducible monic polynomial of degree m
// in ascending code order, verified by trial division, so equal (p, m) always
// produce identical arithmetic. Immutable after construction.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t m,
        std::uint32_t q_bound = kDefaultFieldBound);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }

  // Length m+1, constant term first, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  fe add(fe a, fe b) const;
  fe neg(fe a) const;
  fe sub(fe a, fe b) const { return add(a, neg(b)); }
  fe mul(fe a, fe b) const;
  fe inv(fe a) const;  // rejects 0
  fe pow(fe a, std::uint64_t e) const;

  // (is_square, smallest root). 0 maps to (true, 0). For odd p the two roots
  // of a nonzero square are r and -r; the smaller code is returned. In
  // characteristic 2 every element has exactly one root.
  std::pair<bool, fe> square_info(fe a) const;
  bool is_square(fe a) const { return square_info(a).first; }
  fe sqrt_of(fe a) const;  // rejects non-squares

  // Fixed points of x -> x^(p^n): the subfield GF(p^n), ascending codes.
  // Requires n | m.
  std::vector<fe> subfield(std::uint32_t n) const;

  // Smallest code generating the multiplicative group.
  fe primitive_root() const;

 private:
  fe mul_poly(fe a, fe b) const;
  fe tonelli_root(fe a) const;
  void build_tables();

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  // x^(m+i) mod modulus for i in [0, m-1), used by the on-the-fly reduction.
  std::vector<std::vector<std::uint32_t>> red_;
  bool tabled_ = false;
  std::vector<std::uint16_t> mul_tab_;
  std::vector<std::uint16_t> add_tab_;  // odd p only; char 2 adds via xor
  std::vector<fe> inv_tab_;
  std::vector<fe> neg_tab_;
  // sqrt_tab_[a] = smallest root, or q if a is a non-square. Tabled fields
  // only; larger fields answer square_info per call.
  std::vector<fe> sqrt_tab_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::uint32_t q_bound = kDefaultFieldBound);

}  // namespace caforge
