#include "caforge/adapters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "caforge/errors.hpp"

namespace caforge {

PermOps::PermOps(std::uint32_t degree) : d_(degree) {
  if (degree < 1 || degree > 15)
    throw std::invalid_argument("PermOps: degree must be in [1, 15]");
  std::vector<std::uint32_t> e(degree);
  std::iota(e.begin(), e.end(), 0u);
  id_ = pack(e);
}

ecode PermOps::pack(const std::vector<std::uint32_t>& images) const {
  if (images.size() != d_)
    throw std::invalid_argument("PermOps: wrong image count");
  std::vector<bool> seen(d_, false);
  ecode c = 0;
  for (std::uint32_t i = d_; i-- > 0;) {
    if (images[i] >= d_ || seen[images[i]])
      throw std::invalid_argument("PermOps: not a permutation");
    seen[images[i]] = true;
    c = c * d_ + images[i];
  }
  return c;
}

std::vector<std::uint32_t> PermOps::unpack(ecode c) const {
  std::vector<std::uint32_t> images(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    images[i] = static_cast<std::uint32_t>(c % d_);
    c /= d_;
  }
  return images;
}

ecode PermOps::mul(ecode a, ecode b) const {
  std::uint32_t pa[15], pb[15];
  ecode ta = a, tb = b;
  for (std::uint32_t i = 0; i < d_; ++i) {
    pa[i] = static_cast<std::uint32_t>(ta % d_);
    ta /= d_;
    pb[i] = static_cast<std::uint32_t>(tb % d_);
    tb /= d_;
  }
  ecode c = 0;
  for (std::uint32_t i = d_; i-- > 0;) c = c * d_ + pa[pb[i]];
  return c;
}

ecode PermOps::inv(ecode a) const {
  std::uint32_t pa[15];
  for (std::uint32_t i = 0; i < d_; ++i) {
    pa[i] = static_cast<std::uint32_t>(a % d_);
    a /= d_;
  }
  std::uint32_t pi[15];
  for (std::uint32_t i = 0; i < d_; ++i) pi[pa[i]] = i;
  ecode c = 0;
  for (std::uint32_t i = d_; i-- > 0;) c = c * d_ + pi[i];
  return c;
}

TableOps::TableOps(std::uint32_t n, std::vector<std::uint32_t> table)
    : n_(n), table_(std::move(table)), inv_(n, n) {
  if (n == 0 || table_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("TableOps: bad table size");
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (table_[a * n_] != a || table_[a] != a)
      throw std::invalid_argument("TableOps: 0 is not an identity");
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (table_[a * n_ + b] >= n_)
        throw std::invalid_argument("TableOps: entry out of range");
      if (table_[a * n_ + b] == 0) inv_[a] = b;
    }
    if (inv_[a] == n_) throw std::invalid_argument("TableOps: missing inverse");
  }
}

ecode TableOps::mul(ecode a, ecode b) const {
  if (a >= n_ || b >= n_) throw inconsistency_error("TableOps: code out of range");
  return table_[static_cast<std::size_t>(a) * n_ + b];
}

ecode TableOps::inv(ecode a) const {
  if (a >= n_) throw inconsistency_error("TableOps: code out of range");
  return inv_[a];
}

DihedralOps::DihedralOps(std::uint32_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DihedralOps: n must be positive");
}

// Element s^e r^k coded e*n + k, with r s = s r^-1.
ecode DihedralOps::mul(ecode a, ecode b) const {
  const std::uint64_t e1 = a / n_, k1 = a % n_;
  const std::uint64_t e2 = b / n_, k2 = b % n_;
  const std::uint64_t e = (e1 + e2) % 2;
  const std::uint64_t k = e2 ? (n_ - k1 + k2) % n_ : (k1 + k2) % n_;
  return e * n_ + k;
}

ecode DihedralOps::inv(ecode a) const {
  const std::uint64_t e = a / n_, k = a % n_;
  if (e) return a;  // reflections are involutions
  return (n_ - k) % n_;
}

CyclicOps::CyclicOps(std::uint32_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CyclicOps: n must be positive");
}

ecode CyclicOps::mul(ecode a, ecode b) const { return (a + b) % n_; }

ecode CyclicOps::inv(ecode a) const { return (n_ - a) % n_; }

ProductOps::ProductOps(OpsPtr a, OpsPtr b, ecode b_mod)
    : a_(std::move(a)), b_(std::move(b)), b_mod_(b_mod) {
  if (!a_ || !b_ || b_mod_ == 0)
    throw std::invalid_argument("ProductOps: bad factors");
}

ecode ProductOps::mul(ecode x, ecode y) const {
  return pack(a_->mul(x / b_mod_, y / b_mod_), b_->mul(x % b_mod_, y % b_mod_));
}

ecode ProductOps::inv(ecode x) const {
  return pack(a_->inv(x / b_mod_), b_->inv(x % b_mod_));
}

Group perm_group(std::uint32_t degree,
                 const std::vector<std::vector<std::uint32_t>>& gens,
                 std::string label) {
  auto ops = std::make_shared<PermOps>(degree);
  std::vector<ecode> codes;
  codes.reserve(gens.size());
  for (const auto& g : gens) codes.push_back(ops->pack(g));
  return close(ops, ops->identity(), codes, kDefaultGroupBound, std::move(label));
}

namespace {

// Image vector from disjoint cycles; points not mentioned are fixed.
std::vector<std::uint32_t> from_cycles(
    std::uint32_t degree,
    const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& cyc : cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      images[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return images;
}

}  // namespace

Group sym(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("sym: n must be positive");
  if (n == 1) return perm_group(1, {}, "S1");
  std::vector<std::uint32_t> ncycle(n);
  for (std::uint32_t i = 0; i < n; ++i) ncycle[i] = (i + 1) % n;
  return perm_group(n, {from_cycles(n, {{0, 1}}), ncycle},
                    "S" + std::to_string(n));
}

Group alt(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("alt: n must be at least 3");
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t i = 0; i + 2 < n; ++i)
    gens.push_back(from_cycles(n, {{i, i + 1, i + 2}}));
  return perm_group(n, gens, "A" + std::to_string(n));
}

Group cyclic(std::uint32_t n) {
  auto ops = std::make_shared<CyclicOps>(n);
  std::vector<ecode> carrier(n);
  std::iota(carrier.begin(), carrier.end(), ecode{0});
  return Group(ops, std::move(carrier), 0, n > 1 ? std::vector<ecode>{1} : std::vector<ecode>{},
               "C" + std::to_string(n));
}

Group dihedral(std::uint32_t order) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("dihedral: order must be even and at least 4");
  const std::uint32_t n = order / 2;
  auto ops = std::make_shared<DihedralOps>(n);
  std::vector<ecode> carrier(order);
  std::iota(carrier.begin(), carrier.end(), ecode{0});
  return Group(ops, std::move(carrier), 0, {1, n}, "D" + std::to_string(order));
}

Group quaternion8() {
  // Codes 0..7 = 1, -1, i, -i, j, -j, k, -k.
  auto unit = [](std::uint32_t c) { return c / 2; };  // 0:1 1:i 2:j 3:k
  auto sign = [](std::uint32_t c) { return c % 2; };
  // unit products with result sign: i*j = k, j*i = -k, etc.
  static const std::uint32_t uprod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const std::uint32_t usign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::uint32_t> table(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      const std::uint32_t u = uprod[unit(a)][unit(b)];
      const std::uint32_t s =
          (sign(a) + sign(b) + usign[unit(a)][unit(b)]) % 2;
      table[a * 8 + b] = u * 2 + s;
    }
  auto ops = std::make_shared<TableOps>(8, std::move(table));
  return Group(ops, {0, 1, 2, 3, 4, 5, 6, 7}, 0, {2, 4}, "Q8");
}

Group frobenius20() {
  // 5-cycle plus the order-4 map x -> 2x on Z/5.
  return perm_group(5,
                    {from_cycles(5, {{0, 1, 2, 3, 4}}),
                     from_cycles(5, {{1, 2, 4, 3}})},
                    "F20");
}

Group sym3_wreath_c2() {
  return perm_group(6,
                    {from_cycles(6, {{0, 1, 2}}), from_cycles(6, {{0, 1}}),
                     from_cycles(6, {{3, 4, 5}}), from_cycles(6, {{3, 4}}),
                     from_cycles(6, {{0, 3}, {1, 4}, {2, 5}})},
                    "S3wrC2");
}

namespace {

// Point (x, y) of GF(3)^2 at index x + 3y.
std::vector<std::uint32_t> affine_map_gf3(std::uint32_t a, std::uint32_t b,
                                          std::uint32_t c, std::uint32_t d,
                                          std::uint32_t tx, std::uint32_t ty) {
  std::vector<std::uint32_t> images(9);
  for (std::uint32_t y = 0; y < 3; ++y)
    for (std::uint32_t x = 0; x < 3; ++x)
      images[x + 3 * y] =
          (a * x + b * y + tx) % 3 + 3 * ((c * x + d * y + ty) % 3);
  return images;
}

}  // namespace

Group frobenius72_q8() {
  // Translations plus the quaternion subgroup of GL(2,3).
  return perm_group(9,
                    {affine_map_gf3(1, 0, 0, 1, 1, 0),
                     affine_map_gf3(1, 0, 0, 1, 0, 1),
                     affine_map_gf3(0, 2, 1, 0, 0, 0),
                     affine_map_gf3(1, 1, 1, 2, 0, 0)},
                    "AGL72");
}

Group gl2_3() {
  // Nonzero vectors (x, y) of GF(3)^2 listed lexicographically in (x, y).
  auto vec_index = [](std::uint32_t x, std::uint32_t y) {
    return 3 * x + y - 1;  // skips (0,0)
  };
  auto matrix_map = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        std::uint32_t d) {
    std::vector<std::uint32_t> images(8);
    for (std::uint32_t x = 0; x < 3; ++x)
      for (std::uint32_t y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        images[vec_index(x, y)] =
            vec_index((a * x + b * y) % 3, (c * x + d * y) % 3);
      }
    return images;
  };
  return perm_group(8,
                    {matrix_map(1, 1, 0, 1), matrix_map(0, 2, 1, 0),
                     matrix_map(1, 0, 0, 2)},
                    "GL(2,3)");
}

Group direct_product(const Group& a, const Group& b, std::string label) {
  ecode bmax = 0;
  for (ecode x : b.carrier()) bmax = std::max(bmax, x);
  auto ops = std::make_shared<ProductOps>(a.ops(), b.ops(), bmax + 1);
  std::vector<ecode> carrier;
  carrier.reserve(a.order() * b.order());
  for (ecode x : a.carrier())
    for (ecode y : b.carrier()) carrier.push_back(ops->pack(x, y));
  std::sort(carrier.begin(), carrier.end());
  std::vector<ecode> gens;
  for (ecode x : a.generators()) gens.push_back(ops->pack(x, b.identity()));
  for (ecode y : b.generators()) gens.push_back(ops->pack(a.identity(), y));
  if (label.empty()) label = a.label() + "x" + b.label();
  return Group(ops, std::move(carrier), ops->pack(a.identity(), b.identity()),
               std::move(gens), std::move(label));
}

}  // namespace caforge
