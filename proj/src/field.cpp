#include "caforge/field.hpp"

#include <algorithm>
#include <string>

#include "caforge/errors.hpp"

namespace caforge {
namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Coefficient vectors over GF(p), constant term first.
using Poly = std::vector<std::uint32_t>;

Poly decode_monic(std::uint64_t k, std::uint32_t deg, std::uint32_t p) {
  Poly c(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    c[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  c[deg] = 1;
  return c;
}

// True iff the monic b of degree db divides a. Works on a copy of a.
bool divisible(Poly a, const Poly& b, std::uint32_t db, std::uint32_t p) {
  for (std::size_t i = a.size(); i-- > db;) {
    std::uint32_t c = a[i];
    if (c == 0) continue;
    std::size_t shift = i - db;
    for (std::uint32_t j = 0; j <= db; ++j) {
      std::uint32_t t =
          static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * b[j] % p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
  }
  for (std::uint32_t j = 0; j < db; ++j)
    if (a[j] != 0) return false;
  return true;
}

bool irreducible(const Poly& cand, std::uint32_t m, std::uint32_t p) {
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t j = 0; j < count; ++j)
      if (divisible(cand, decode_monic(j, d, p), d, p)) return false;
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m, std::uint32_t q_bound)
    : p_(p), m_(m) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field: p must be prime");
  if (m < 1) throw std::invalid_argument("field: m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > q_bound)
      throw bound_error("field: q = p^m exceeds bound " +
                        std::to_string(q_bound));
  }
  q_ = static_cast<std::uint32_t>(q);

  // First irreducible monic polynomial of degree m in ascending code order.
  for (std::uint64_t k = 0;; ++k) {
    Poly cand = decode_monic(k, m, p);
    if (irreducible(cand, m, p)) {
      modulus_ = cand;
      break;
    }
  }

  if (m_ > 1) {
    // red_[i] = x^(m+i) mod modulus, the reduction rows for degrees >= m.
    red_.resize(m_ - 1);
    Poly r(m_, 0);
    for (std::uint32_t j = 0; j < m_; ++j) r[j] = (p_ - modulus_[j]) % p_;
    Poly x_m = r;  // x^m mod modulus
    for (std::uint32_t i = 0; i + 1 < m_; ++i) {
      red_[i] = r;
      Poly s(m_, 0);
      std::uint32_t top = r[m_ - 1];
      for (std::uint32_t j = m_ - 1; j > 0; --j) s[j] = r[j - 1];
      for (std::uint32_t j = 0; j < m_; ++j)
        s[j] = static_cast<std::uint32_t>(
            (s[j] + static_cast<std::uint64_t>(top) * x_m[j]) % p_);
      r = s;
    }
  }

  if (q_ <= kFieldTableLimit) build_tables();
}

fe Field::mul_poly(fe a, fe b) const {
  if (m_ == 1)
    return static_cast<fe>(static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t da[32], db[32];
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::uint64_t acc[63] = {0};
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      acc[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  for (std::uint32_t i = m_ - 1; i-- > 0;) {
    std::uint64_t c = acc[m_ + i] % p_;
    if (c == 0) continue;
    const Poly& row = red_[i];
    for (std::uint32_t j = 0; j < m_; ++j) acc[j] += c * row[j];
  }
  fe out = 0;
  for (std::uint32_t i = m_; i-- > 0;)
    out = out * p_ + static_cast<fe>(acc[i] % p_);
  return out;
}

void Field::build_tables() {
  tabled_ = true;
  neg_tab_.resize(q_);
  for (fe a = 0; a < q_; ++a) {
    fe v = a, out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      out += ((p_ - v % p_) % p_) * mult;
      v /= p_;
      mult *= p_;
    }
    neg_tab_[a] = out;
  }

  if (p_ != 2) {
    add_tab_.resize(static_cast<std::size_t>(q_) * q_);
    for (fe a = 0; a < q_; ++a)
      for (fe b = 0; b < q_; ++b) {
        fe va = a, vb = b, out = 0, mult = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
          out += ((va % p_) + (vb % p_)) % p_ * mult;
          va /= p_;
          vb /= p_;
          mult *= p_;
        }
        add_tab_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(out);
      }
  }

  mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
  if (m_ == 1) {
    for (fe a = 0; a < q_; ++a)
      for (fe b = 0; b < q_; ++b)
        mul_tab_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(static_cast<std::uint64_t>(a) * b % p_);
  } else {
    // mulx[c] = x * c, used to fill rows by one digit of b at a time:
    // a*b = a*b0 + x*(a*(b div p)).
    std::vector<fe> mulx(q_);
    for (fe c = 0; c < q_; ++c) mulx[c] = mul_poly(c, static_cast<fe>(p_));
    for (fe a = 0; a < q_; ++a) {
      std::uint16_t* row = &mul_tab_[static_cast<std::size_t>(a) * q_];
      row[0] = 0;
      for (fe b = 1; b < q_; ++b) {
        std::uint32_t b0 = b % p_;
        fe hi = mulx[row[b / p_]];
        // digitwise hi + b0 * a
        fe va = a, out = 0, mult = 1, vh = hi;
        for (std::uint32_t i = 0; i < m_; ++i) {
          out += ((vh % p_) + (va % p_) * b0 % p_) % p_ * mult;
          va /= p_;
          vh /= p_;
          mult *= p_;
        }
        row[b] = static_cast<std::uint16_t>(out);
      }
    }
  }

  inv_tab_.assign(q_, 0);
  for (fe a = 1; a < q_; ++a) inv_tab_[a] = pow(a, q_ - 2);

  sqrt_tab_.assign(q_, q_);
  for (fe r = 0; r < q_; ++r) {
    fe s = mul(r, r);
    if (sqrt_tab_[s] == q_) sqrt_tab_[s] = r;
  }
}

fe Field::add(fe a, fe b) const {
  if (p_ == 2) return a ^ b;
  if (tabled_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  if (m_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<fe>(s >= p_ ? s - p_ : s);
  }
  fe out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

fe Field::neg(fe a) const {
  if (p_ == 2) return a;
  if (tabled_) return neg_tab_[a];
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  fe out = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

fe Field::mul(fe a, fe b) const {
  if (tabled_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_poly(a, b);
}

fe Field::inv(fe a) const {
  if (a == 0) throw std::invalid_argument("field: 0 has no inverse");
  if (tabled_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

fe Field::pow(fe a, std::uint64_t e) const {
  fe r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fe Field::tonelli_root(fe a) const {
  // Caller guarantees odd q and a a nonzero square.
  std::uint32_t s = 0;
  std::uint64_t t = q_ - 1;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  fe z = 2;
  while (pow(z, (q_ - 1) / 2) == 1) ++z;  // smallest non-square by code
  std::uint32_t mm = s;
  fe c = pow(z, t);
  fe r = pow(a, (t + 1) / 2);
  fe u = pow(a, t);
  while (u != 1) {
    std::uint32_t i = 0;
    fe v = u;
    while (v != 1) {
      v = mul(v, v);
      ++i;
    }
    fe b = c;
    for (std::uint32_t j = 0; j + i + 1 < mm; ++j) b = mul(b, b);
    mm = i;
    c = mul(b, b);
    u = mul(u, c);
    r = mul(r, b);
  }
  return r;
}

std::pair<bool, fe> Field::square_info(fe a) const {
  if (a == 0) return {true, 0};
  if (tabled_) {
    fe r = sqrt_tab_[a];
    return {r != q_, r == q_ ? 0 : r};
  }
  if (p_ == 2) return {true, pow(a, q_ / 2)};
  if (pow(a, (q_ - 1) / 2) != 1) return {false, 0};
  fe r = tonelli_root(a);
  return {true, std::min(r, neg(r))};
}

fe Field::sqrt_of(fe a) const {
  auto [ok, r] = square_info(a);
  if (!ok) throw std::invalid_argument("field: element is not a square");
  return r;
}

std::vector<fe> Field::subfield(std::uint32_t n) const {
  if (n < 1 || n > m_ || m_ % n != 0)
    throw std::invalid_argument("field: subfield degree must divide m");
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < n; ++i) e *= p_;
  std::vector<fe> out;
  out.reserve(static_cast<std::size_t>(e));
  for (fe a = 0; a < q_; ++a)
    if (pow(a, e) == a) out.push_back(a);
  if (out.size() != e)
    throw inconsistency_error("field: subfield has wrong size");
  return out;
}

fe Field::primitive_root() const {
  if (q_ == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t n = q_ - 1;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (fe g = 2; g < q_; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors)
      if (pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw inconsistency_error("field: no primitive root found");
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint32_t q_bound) {
  return std::make_shared<const Field>(p, m, q_bound);
}

}  // namespace caforge
