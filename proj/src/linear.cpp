#include "caforge/linear.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "caforge/errors.hpp"

namespace caforge {

ecode pack_mat(const Field& f, Mat2 m) {
  const ecode q = f.q();
  return ((static_cast<ecode>(m.a) * q + m.b) * q + m.c) * q + m.d;
}

Mat2 unpack_mat(const Field& f, ecode c) {
  const ecode q = f.q();
  Mat2 m;
  m.d = static_cast<fe>(c % q);
  c /= q;
  m.c = static_cast<fe>(c % q);
  c /= q;
  m.b = static_cast<fe>(c % q);
  m.a = static_cast<fe>(c / q);
  return m;
}

fe mat_det(const Field& f, ecode c) {
  const Mat2 m = unpack_mat(f, c);
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

fe mat_trace(const Field& f, ecode c) {
  const Mat2 m = unpack_mat(f, c);
  return f.add(m.a, m.d);
}

ecode mul_mat(const Field& f, ecode x, ecode y) {
  const Mat2 u = unpack_mat(f, x), v = unpack_mat(f, y);
  Mat2 w;
  w.a = f.add(f.mul(u.a, v.a), f.mul(u.b, v.c));
  w.b = f.add(f.mul(u.a, v.b), f.mul(u.b, v.d));
  w.c = f.add(f.mul(u.c, v.a), f.mul(u.d, v.c));
  w.d = f.add(f.mul(u.c, v.b), f.mul(u.d, v.d));
  return pack_mat(f, w);
}

namespace {

ecode negate_mat(const Field& f, ecode c) {
  const Mat2 m = unpack_mat(f, c);
  return pack_mat(f, {f.neg(m.a), f.neg(m.b), f.neg(m.c), f.neg(m.d)});
}

ecode sign_min(const Field& f, ecode c) {
  if (f.p() == 2) return c;
  return std::min(c, negate_mat(f, c));
}

ecode inv_mat_det1(const Field& f, ecode c) {
  const Mat2 m = unpack_mat(f, c);
  return pack_mat(f, {m.d, f.neg(m.b), f.neg(m.c), m.a});
}

}  // namespace

ecode canonical_mat(const Field& f, ecode c) {
  if (mat_det(f, c) != 1)
    throw inconsistency_error("canonical_mat: determinant is not 1");
  return sign_min(f, c);
}

SL2Ops::SL2Ops(FieldPtr f) : f_(std::move(f)) {
  if (!f_) throw std::invalid_argument("SL2Ops: null field");
}

ecode SL2Ops::mul(ecode x, ecode y) const { return mul_mat(*f_, x, y); }

ecode SL2Ops::inv(ecode x) const { return inv_mat_det1(*f_, x); }

PSL2Ops::PSL2Ops(FieldPtr f) : f_(std::move(f)) {
  if (!f_) throw std::invalid_argument("PSL2Ops: null field");
}

ecode PSL2Ops::mul(ecode x, ecode y) const {
  return sign_min(*f_, mul_mat(*f_, x, y));
}

ecode PSL2Ops::inv(ecode x) const { return sign_min(*f_, inv_mat_det1(*f_, x)); }

namespace {

// Visits every determinant-1 matrix with entries in S (the whole field or a
// subfield, ascending, 0 first) in ascending packed-code order. For fixed
// (a, b, c) the last entry is determined, so lexicographic (a, b, c) loops
// give sorted output.
template <class Fn>
void for_each_sl2(const Field& f, const std::vector<fe>& S, Fn&& fn) {
  const fe one = 1;
  for (fe b : S) {  // a = 0 block: need b*c = -1
    if (b == 0) continue;
    const fe c = f.neg(f.inv(b));
    for (fe d : S) fn(0u, b, c, d);
  }
  for (fe a : S) {
    if (a == 0) continue;
    const fe ia = f.inv(a);
    for (fe b : S)
      for (fe c : S) fn(a, b, c, f.mul(ia, f.add(one, f.mul(b, c))));
  }
}

std::vector<fe> whole_field(const Field& f) {
  std::vector<fe> S(f.q());
  for (fe x = 0; x < f.q(); ++x) S[x] = x;
  return S;
}

struct StandardGens {
  std::vector<ecode> sl;  // diag(g, 1/g) if nontrivial, unit shear, antidiagonal
};

StandardGens standard_gens(const Field& f) {
  StandardGens out;
  const fe g = f.primitive_root();
  if (g != 1)
    out.sl.push_back(pack_mat(f, {g, 0, 0, f.inv(g)}));
  out.sl.push_back(pack_mat(f, {1, 1, 0, 1}));
  out.sl.push_back(pack_mat(f, {0, 1, f.neg(1), 0}));
  return out;
}

}  // namespace

Group sl2(FieldPtr f) {
  const Field& F = *f;
  std::vector<ecode> carrier;
  carrier.reserve(static_cast<std::size_t>(F.q()) * F.q() * F.q());
  for_each_sl2(F, whole_field(F), [&](fe a, fe b, fe c, fe d) {
    carrier.push_back(pack_mat(F, {a, b, c, d}));
  });
  auto ops = std::make_shared<SL2Ops>(f);
  return Group(ops, std::move(carrier), pack_mat(F, {1, 0, 0, 1}),
               standard_gens(F).sl, "SL(2," + std::to_string(F.q()) + ")");
}

Group psl2(FieldPtr f) {
  const Field& F = *f;
  const bool odd = F.p() != 2;
  std::vector<ecode> carrier;
  {
    const auto q = static_cast<std::size_t>(F.q());
    carrier.reserve(q * (q * q - 1) / (odd ? 2 : 1));
  }
  // Keep the representative whose first nonzero entry is the smaller of the
  // pair {e, -e}; for a = 0 the determinant forces b nonzero.
  for_each_sl2(F, whole_field(F), [&](fe a, fe b, fe c, fe d) {
    if (odd) {
      const fe lead = a != 0 ? a : b;
      if (lead > F.neg(lead)) return;
    }
    carrier.push_back(pack_mat(F, {a, b, c, d}));
  });
  auto ops = std::make_shared<PSL2Ops>(f);
  std::vector<ecode> gens;
  for (ecode s : standard_gens(F).sl) gens.push_back(sign_min(F, s));
  return Group(ops, std::move(carrier), pack_mat(F, {1, 0, 0, 1}),
               std::move(gens), "PSL(2," + std::to_string(F.q()) + ")");
}

Group borel_psl2(FieldPtr f) {
  const Field& F = *f;
  const bool odd = F.p() != 2;
  std::vector<ecode> carrier;
  std::vector<ecode> gens;
  for (fe a = 1; a < F.q(); ++a) {
    if (odd && a > F.neg(a)) continue;
    const fe ia = F.inv(a);
    for (fe b = 0; b < F.q(); ++b)
      carrier.push_back(pack_mat(F, {a, b, 0, ia}));
  }
  gens.push_back(sign_min(F, pack_mat(F, {1, 1, 0, 1})));
  const fe g = F.primitive_root();
  if (g != 1)
    gens.push_back(sign_min(F, pack_mat(F, {g, 0, 0, F.inv(g)})));
  auto ops = std::make_shared<PSL2Ops>(f);
  return Group(ops, std::move(carrier), pack_mat(F, {1, 0, 0, 1}),
               std::move(gens), "Borel(" + std::to_string(F.q()) + ")");
}

std::vector<ecode> psl2_subfield_carrier(const Field& f, std::uint32_t n) {
  const auto S = f.subfield(n);
  const bool odd = f.p() != 2;
  std::vector<ecode> carrier;
  for_each_sl2(f, S, [&](fe a, fe b, fe c, fe d) {
    if (odd) {
      const fe lead = a != 0 ? a : b;
      if (lead > f.neg(lead)) return;
    }
    carrier.push_back(pack_mat(f, {a, b, c, d}));
  });
  return carrier;
}

std::vector<ecode> pgl2_subfield_carrier(const Field& f, std::uint32_t n) {
  if (f.p() == 2)
    throw std::invalid_argument("pgl2_subfield_carrier: needs odd characteristic");
  if ((f.m() / n) % 2 != 0 || f.m() % n != 0)
    throw std::invalid_argument("pgl2_subfield_carrier: extension degree must be even");
  const auto S = f.subfield(n);

  // First x in the subfield that is a non-square there.
  std::uint64_t q0 = 1;
  for (std::uint32_t i = 0; i < n; ++i) q0 *= f.p();
  fe delta = 0;
  for (fe x : S) {
    if (x == 0) continue;
    if (f.pow(x, (q0 - 1) / 2) == f.neg(1)) {
      delta = x;
      break;
    }
  }
  if (delta == 0)
    throw inconsistency_error("pgl2_subfield_carrier: no subfield non-square");
  const auto [sq, root] = f.square_info(delta);
  if (!sq)
    throw inconsistency_error("pgl2_subfield_carrier: scaling root missing");
  const fe s = f.inv(root);

  std::vector<ecode> out = psl2_subfield_carrier(f, n);
  // Matrices of determinant delta, rescaled by 1/sqrt(delta); every coset
  // element arises from exactly two of them (M and -M).
  auto emit = [&](fe a, fe b, fe c, fe d) {
    out.push_back(canonical_mat(
        f, pack_mat(f, {f.mul(s, a), f.mul(s, b), f.mul(s, c), f.mul(s, d)})));
  };
  for (fe b : S) {  // a = 0: need b*c = -delta
    if (b == 0) continue;
    const fe c = f.neg(f.mul(delta, f.inv(b)));
    for (fe d : S) emit(0, b, c, d);
  }
  for (fe a : S) {
    if (a == 0) continue;
    const fe ia = f.inv(a);
    for (fe b : S)
      for (fe c : S) emit(a, b, c, f.mul(ia, f.add(delta, f.mul(b, c))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace caforge
