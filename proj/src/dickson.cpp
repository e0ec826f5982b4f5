#include "caforge/dickson.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "caforge/errors.hpp"
#include "caforge/linear.hpp"

namespace caforge {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 acc = 1, base = b % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

bool five_is_square_mod(std::uint32_t p) {
  return powmod(5, (p - 1) / 2, p) == 1;
}

}  // namespace

std::vector<MaximalClassSpec> applicable_classes(const Field& f) {
  const std::uint64_t q = f.q();
  const std::uint32_t p = f.p(), m = f.m();
  if (q < 4)
    throw std::invalid_argument("applicable_classes: q must be at least 4");
  const std::uint64_t kappa = p == 2 ? 1 : 2;
  std::vector<MaximalClassSpec> out;

  out.push_back({1, q * (q - 1) / kappa, false, 0, "point stabilizer"});
  if (q != 5 && q != 7 && q != 9 && q != 11)
    out.push_back(
        {2, 2 * (q - 1) / kappa, false, 0, "split torus normalizer"});
  if (q != 7 && q != 9)
    out.push_back(
        {3, 2 * (q + 1) / kappa, false, 0, "nonsplit torus normalizer"});
  const std::uint32_t r10 = q % 10;
  if ((r10 == 1 || r10 == 9) &&
      ((m == 1 && five_is_square_mod(p)) || (m == 2 && !five_is_square_mod(p))))
    out.push_back({4, 60, true, 0, "alternating degree 5"});
  if (m == 1 && (q * q - 1) % 16 == 0)
    out.push_back({5, 24, true, 0, "symmetric degree 4"});
  const std::uint32_t r40 = q % 40;
  if (m == 1 && (r40 == 3 || r40 == 5 || r40 == 13 || r40 == 27 || r40 == 37))
    out.push_back({6, 12, false, 0, "alternating degree 4"});
  if (p != 2 && m % 2 == 0) {
    const std::uint64_t q0 = ipow(p, m / 2);
    out.push_back(
        {7, q0 * (q0 * q0 - 1), true, m / 2, "subfield projective general"});
  }
  for (std::uint32_t n = 1; n < m; ++n) {
    if (m % n != 0) continue;
    const std::uint32_t mn = m / n;
    if (!((is_prime_u32(mn) && mn % 2 == 1) || (p == 2 && 2 * n == m)))
      continue;
    const std::uint64_t qn = ipow(p, n);
    const std::uint64_t kn = p == 2 ? 1 : 2;
    out.push_back(
        {8, qn * (qn * qn - 1) / kn, false, n, "subfield projective special"});
  }
  return out;
}

namespace {

// First carrier element of the given exact order.
ecode first_of_order(const Group& g, std::uint64_t o) {
  for (ecode x : g.carrier())
    if (g.element_order(x) == o) return x;
  throw inconsistency_error("no element of required order found");
}

// Pools of elements of a fixed order, grown on demand. Scan position is kept
// so carrier elements are examined once.
class OrderPool {
 public:
  OrderPool(const Group& g, std::uint64_t o) : g_(g), o_(o) {}
  // Extends the pool up to cap entries; returns false once the carrier is
  // exhausted and nothing was added.
  bool grow(std::size_t cap) {
    bool added = false;
    while (pool_.size() < cap && pos_ < g_.carrier().size()) {
      const ecode x = g_.carrier()[pos_++];
      if (g_.element_order(x) == o_) {
        pool_.push_back(x);
        added = true;
      }
    }
    return added;
  }
  const std::vector<ecode>& items() const { return pool_; }

 private:
  const Group& g_;
  std::uint64_t o_;
  std::size_t pos_ = 0;
  std::vector<ecode> pool_;
};

// Finds x, y in g with |x| = 2, |y| = b, |xy| = c and |<x,y>| = size. The
// (2,b,c) orders pin the isomorphism type once the closure has exactly the
// expected size, since the corresponding triangle groups are finite.
Group triangle_subgroup(const Group& g, std::uint64_t b, std::uint64_t c,
                        std::uint64_t size, const std::string& label) {
  const ElementOps& ops = *g.ops();
  OrderPool xs(g, 2), ys(g, b);
  std::size_t cap = 512;
  std::size_t tried_x = 0, tried_y = 0;
  while (true) {
    const bool gx = xs.grow(cap);
    const bool gy = ys.grow(cap);
    // retry only pairs with at least one fresh member
    for (std::size_t yi = 0; yi < ys.items().size(); ++yi) {
      const ecode y = ys.items()[yi];
      for (std::size_t xi = 0; xi < xs.items().size(); ++xi) {
        if (yi < tried_y && xi < tried_x) continue;
        const ecode x = xs.items()[xi];
        if (g.element_order(ops.mul(x, y)) != c) continue;
        try {
          Group h = close(g.ops(), g.identity(), {x, y}, size, label);
          if (h.order() == size) return h;
        } catch (const bound_error&) {
        }
      }
    }
    tried_x = xs.items().size();
    tried_y = ys.items().size();
    if (!gx && !gy)
      throw inconsistency_error("triangle_subgroup: no generating pair");
    cap *= 4;
  }
}

ecode canonical_gen(const Field& f, fe a, fe b, fe c, fe d) {
  return canonical_mat(f, pack_mat(f, {a, b, c, d}));
}

}  // namespace

Group construct_class_rep(const Group& psl, FieldPtr f,
                          const MaximalClassSpec& spec) {
  const Field& F = *f;
  const std::uint64_t q = F.q();
  const std::uint64_t kappa = F.p() == 2 ? 1 : 2;
  Group rep;
  switch (spec.case_id) {
    case 1:
      rep = psl.subgroup(borel_psl2(f).carrier(), {}, "point stabilizer");
      break;
    case 2: {
      const fe g = F.primitive_root();
      const ecode dg = canonical_gen(F, g, 0, 0, F.inv(g));
      const ecode w = canonical_gen(F, 0, 1, F.neg(1), 0);
      rep = close(psl.ops(), psl.identity(), {dg, w}, spec.expected_order,
                  "split torus normalizer");
      break;
    }
    case 3: {
      const ecode c = first_of_order(psl, (q + 1) / kappa);
      const ecode ci = psl.inv(c);
      ecode s = 0;
      bool found = false;
      for (ecode t : psl.carrier()) {
        if (psl.mul(psl.mul(t, c), psl.inv(t)) == ci) {
          s = t;
          found = true;
          break;
        }
      }
      if (!found)
        throw inconsistency_error("nonsplit torus: no inverting element");
      rep = close(psl.ops(), psl.identity(), {c, s}, spec.expected_order,
                  "nonsplit torus normalizer");
      break;
    }
    case 4:
      rep = triangle_subgroup(psl, 5, 3, 60, "alternating degree 5");
      break;
    case 5:
      rep = triangle_subgroup(psl, 3, 4, 24, "symmetric degree 4");
      break;
    case 6:
      rep = triangle_subgroup(psl, 3, 3, 12, "alternating degree 4");
      break;
    case 7:
      rep = psl.subgroup(pgl2_subfield_carrier(F, spec.subfield_degree), {},
                         "subfield projective general");
      break;
    case 8:
      rep = psl.subgroup(psl2_subfield_carrier(F, spec.subfield_degree), {},
                         "subfield projective special");
      break;
    default:
      throw std::invalid_argument("construct_class_rep: bad case id");
  }
  if (rep.order() != spec.expected_order)
    throw inconsistency_error("construct_class_rep: order mismatch for case " +
                              std::to_string(spec.case_id));
  return rep;
}

Group diagonal_twin(const Group& psl, const Field& f, const Group& rep) {
  if (f.p() == 2) return rep.subgroup(rep.carrier(), {}, rep.label() + " twin");
  fe ns = 0;
  for (fe x = 2; x < f.q(); ++x)
    if (!f.square_info(x).first) {
      ns = x;
      break;
    }
  if (ns == 0) throw inconsistency_error("diagonal_twin: no non-square");
  const fe nsi = f.inv(ns);
  std::vector<ecode> carrier;
  carrier.reserve(rep.order());
  for (ecode x : rep.carrier()) {
    const Mat2 m = unpack_mat(f, x);
    carrier.push_back(canonical_mat(
        f, pack_mat(f, {m.a, f.mul(ns, m.b), f.mul(nsi, m.c), m.d})));
  }
  std::sort(carrier.begin(), carrier.end());
  return psl.subgroup(std::move(carrier), {}, rep.label() + " twin");
}

namespace {

bool conjugate_subgroups(const Group& g, const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  const ElementOps& ops = *g.ops();
  for (ecode t : g.carrier()) {
    const ecode ti = ops.inv(t);
    bool all = true;
    for (ecode x : a.carrier()) {
      const ecode y = ops.mul(ops.mul(t, x), ti);
      if (!std::binary_search(b.carrier().begin(), b.carrier().end(), y)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

CoverReport verify_cover(FieldPtr f) {
  const Group psl = psl2(f);
  const auto subs = all_subgroups(psl);
  const auto maxidx = maximal_subgroups(psl, subs);
  const auto classes = applicable_classes(*f);

  struct Target {
    std::size_t entry;
    Group grp;
    Fingerprint fp;
  };
  CoverReport report;
  std::vector<Target> targets;
  for (const auto& spec : classes) {
    Group rep = construct_class_rep(psl, f, spec);
    report.entries.push_back({spec.case_id, spec.expected_order,
                              spec.two_classes, 0});
    targets.push_back(
        {report.entries.size() - 1, rep, iso_fingerprint(rep)});
    if (spec.two_classes) {
      Group twin = diagonal_twin(psl, *f, rep);
      targets.push_back(
          {report.entries.size() - 1, twin, iso_fingerprint(twin)});
    }
  }

  report.maximal_count = maxidx.size();
  report.ok = true;
  for (std::size_t mi : maxidx) {
    const Group& msub = subs[mi];
    const Fingerprint mfp = iso_fingerprint(msub);
    bool matched = false;
    std::vector<bool> entry_hit(report.entries.size(), false);
    for (const auto& t : targets) {
      if (entry_hit[t.entry]) continue;  // rep or twin already matched
      if (!(mfp == t.fp)) continue;
      if (conjugate_subgroups(psl, msub, t.grp)) {
        entry_hit[t.entry] = true;
        report.entries[t.entry].matched++;
        matched = true;
      }
    }
    if (!matched) {
      report.ok = false;
      report.unmatched_orders.push_back(msub.order());
    }
  }
  return report;
}

}  // namespace caforge
