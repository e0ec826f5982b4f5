#include "caforge/suzuki.hpp"

#include <algorithm>
#include <stdexcept>

#include "caforge/ca.hpp"
#include "caforge/errors.hpp"
#include "caforge/kernels.hpp"

namespace caforge {

SuzukiOps::SuzukiOps(FieldPtr f, std::uint32_t n) : f_(std::move(f)), n_(n) {
  if (!f_ || f_->p() != 2 || f_->m() != 2 * n + 1)
    throw std::invalid_argument("SuzukiOps: field must be GF(2^(2n+1))");
}

fe SuzukiOps::theta(fe x) const {
  for (std::uint32_t i = 0; i <= n_; ++i) x = f_->mul(x, x);
  return x;
}

ecode SuzukiOps::pack(fe lambda, fe a, fe b) const {
  const ecode r = f_->q();
  return (static_cast<ecode>(lambda) * r + a) * r + b;
}

void SuzukiOps::unpack(ecode c, fe& lambda, fe& a, fe& b) const {
  const ecode r = f_->q();
  b = static_cast<fe>(c % r);
  c /= r;
  a = static_cast<fe>(c % r);
  lambda = static_cast<fe>(c / r);
}

ecode SuzukiOps::mul(ecode x, ecode y) const {
  const Field& F = *f_;
  fe l, a, b, m, c, d;
  unpack(x, l, a, b);
  unpack(y, m, c, d);
  const fe ma = F.mul(m, a);
  const fe lam = F.mul(l, m);
  const fe a2 = F.add(ma, c);
  // b-part: m^(theta+1) * b + d + (m a)^theta * c
  const fe b2 = F.add(F.add(F.mul(F.mul(theta(m), m), b), d),
                      F.mul(theta(ma), c));
  return pack(lam, a2, b2);
}

ecode SuzukiOps::inv(ecode x) const {
  const Field& F = *f_;
  fe l, a, b;
  unpack(x, l, a, b);
  const fe li = F.inv(l);
  const fe lia = F.mul(li, a);
  const fe lt1 = F.mul(theta(li), li);  // l^-(theta+1)
  const fe binv = F.add(F.mul(lt1, b), F.mul(theta(lia), lia));
  return pack(li, lia, binv);
}

Group suzuki_point_stabilizer(std::uint32_t n) {
  if (n < 1)
    throw std::invalid_argument("suzuki_point_stabilizer: n must be >= 1");
  FieldPtr f = make_field(2, 2 * n + 1);
  auto ops = std::make_shared<SuzukiOps>(f, n);
  const std::uint64_t r = f->q();
  std::vector<ecode> carrier;
  carrier.reserve(r * r * (r - 1));
  for (fe lambda = 1; lambda < r; ++lambda)
    for (fe a = 0; a < r; ++a)
      for (fe b = 0; b < r; ++b) carrier.push_back(ops->pack(lambda, a, b));
  std::vector<ecode> gens = {ops->pack(1, 1, 0), ops->pack(1, 0, 1)};
  if (r > 2) gens.push_back(ops->pack(f->primitive_root(), 0, 0));
  return Group(ops, std::move(carrier), ops->pack(1, 0, 0), std::move(gens),
               "SzStab(" + std::to_string(n) + ")");
}

SuzukiLemmaReport verify_suzuki_lemma(std::uint32_t n) {
  Group g = suzuki_point_stabilizer(n);
  const auto ops = std::static_pointer_cast<const SuzukiOps>(g.ops());
  const std::uint64_t r = ops->r();

  SuzukiLemmaReport rep;
  rep.n = n;
  rep.r = r;
  rep.order = g.order();
  rep.degree = r * r + 1;

  auto fs = frobenius_structure(g);
  if (!fs)
    throw inconsistency_error("verify_suzuki_lemma: no Frobenius structure");
  const Group& kernel = fs->kernel;
  const Group& comp = fs->complement;

  rep.kernel_order = kernel.order();
  kernels::PairWitness pw =
      kernels::find_noncommuting_pair(*g.ops(), kernel.carrier());
  rep.kernel_non_abelian = pw.found;
  if (pw.found) rep.kernel_witness = {pw.a, pw.b};

  Group kz = center(kernel);
  rep.kernel_center_order = kz.order();
  bool center_shape = true;
  for (ecode x : kz.carrier()) {
    fe l, a, b;
    ops->unpack(x, l, a, b);
    if (l != 1 || a != 0) center_shape = false;
  }
  rep.kernel_center_expected = center_shape && kz.order() == r;

  std::uint64_t expo = 1;
  for (ecode x : kernel.carrier())
    expo = std::max(expo, kernel.element_order(x));
  rep.kernel_exponent = expo;

  rep.complement_order = comp.order();
  rep.complement_cyclic = false;
  for (ecode x : comp.carrier())
    if (comp.element_order(x) == comp.order()) {
      rep.complement_cyclic = true;
      break;
    }

  rep.stabilizer_ca = is_ca(g);

  rep.ok = rep.order == r * r * (r - 1) && rep.kernel_order == r * r &&
           rep.kernel_non_abelian && rep.kernel_center_expected &&
           rep.kernel_exponent == 4 && rep.complement_order == r - 1 &&
           rep.complement_cyclic && !rep.stabilizer_ca;
  return rep;
}

}  // namespace caforge
