#include "caforge/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "caforge/errors.hpp"
#include "caforge/kernels.hpp"

namespace caforge {
namespace {

bool commute(const ElementOps& ops, ecode a, ecode b) {
  return ops.mul(a, b) == ops.mul(b, a);
}

std::uint64_t hash_codes(const std::vector<ecode>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (ecode c : v) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power_u64(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (d * d > n) return true;  // prime
  while (n % d == 0) n /= d;
  return n == 1;
}

// Reusable state for closures taken inside a fixed parent group, where the
// visited set can be an index bitmap instead of a hash set.
struct Scratch {
  std::vector<std::uint8_t> visited;
  std::vector<std::size_t> touched;
  std::vector<std::size_t> queue;
};

// Closure of gens inside parent. Assumes gens lie in parent and parent is
// closed, which makes every product land in the parent carrier.
std::vector<ecode> close_in(const Group& parent, const std::vector<ecode>& gens,
                            Scratch& s) {
  const auto& pc = parent.carrier();
  if (s.visited.size() < pc.size()) s.visited.assign(pc.size(), 0);
  for (std::size_t t : s.touched) s.visited[t] = 0;
  s.touched.clear();
  s.queue.clear();

  auto push = [&](ecode x) {
    std::size_t idx = parent.index_of(x);
    if (!s.visited[idx]) {
      s.visited[idx] = 1;
      s.touched.push_back(idx);
      s.queue.push_back(idx);
    }
  };
  push(parent.identity());
  for (ecode g : gens) push(g);

  const std::uint64_t full = parent.order();
  for (std::size_t qi = 0; qi < s.queue.size(); ++qi) {
    // a subgroup larger than half the parent is the parent
    if (2 * s.touched.size() > full) {
      std::vector<ecode> out = pc;
      return out;
    }
    ecode v = pc[s.queue[qi]];
    for (ecode g : gens) push(parent.mul(v, g));
  }

  std::vector<std::size_t> idxs = s.touched;
  std::sort(idxs.begin(), idxs.end());
  std::vector<ecode> out;
  out.reserve(idxs.size());
  for (std::size_t i : idxs) out.push_back(pc[i]);
  return out;
}

std::vector<ecode> intersect_sorted(const std::vector<ecode>& a,
                                    const std::vector<ecode>& b) {
  std::vector<ecode> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

Group::Group(OpsPtr ops, std::vector<ecode> carrier_sorted, ecode identity,
             std::vector<ecode> generators, std::string label)
    : ops_(std::move(ops)),
      carrier_(std::move(carrier_sorted)),
      identity_(identity),
      generators_(std::move(generators)),
      label_(std::move(label)) {
  if (!std::is_sorted(carrier_.begin(), carrier_.end()) ||
      std::adjacent_find(carrier_.begin(), carrier_.end()) != carrier_.end())
    throw inconsistency_error("group: carrier must be sorted and duplicate-free");
  if (!std::binary_search(carrier_.begin(), carrier_.end(), identity_))
    throw inconsistency_error("group: identity not in carrier");
}

bool Group::contains(ecode x) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), x);
}

std::size_t Group::index_of(ecode x) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
  if (it == carrier_.end() || *it != x)
    throw std::invalid_argument("group: element not in carrier");
  return static_cast<std::size_t>(it - carrier_.begin());
}

std::uint64_t Group::element_order(ecode x) const {
  std::uint64_t ord = 1;
  ecode y = x;
  while (y != identity_) {
    y = mul(y, x);
    if (++ord > order())
      throw inconsistency_error("group: element order exceeds group order");
  }
  return ord;
}

Group Group::subgroup(std::vector<ecode> carrier_sorted,
                      std::vector<ecode> generators, std::string label) const {
  return Group(ops_, std::move(carrier_sorted), identity_,
               std::move(generators), std::move(label));
}

Group close(OpsPtr ops, ecode identity, const std::vector<ecode>& generators,
            std::uint64_t bound, std::string label) {
  std::vector<ecode> gens;
  for (ecode g : generators)
    if (g != identity && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);

  std::unordered_set<ecode> seen;
  std::vector<ecode> queue;
  seen.insert(identity);
  queue.push_back(identity);
  for (ecode g : gens)
    if (seen.insert(g).second) queue.push_back(g);

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ecode v = queue[qi];
    for (ecode g : gens) {
      ecode w = ops->mul(v, g);
      if (seen.insert(w).second) {
        if (seen.size() > bound)
          throw bound_error("close: closure exceeds bound " +
                            std::to_string(bound));
        queue.push_back(w);
      }
    }
  }

  std::vector<ecode> carrier(queue.begin(), queue.end());
  std::sort(carrier.begin(), carrier.end());
  return Group(std::move(ops), std::move(carrier), identity, std::move(gens),
               std::move(label));
}

std::vector<ecode> find_generators(const Group& g) {
  if (!g.generators().empty()) return g.generators();
  std::vector<ecode> gens;
  Scratch s;
  std::vector<ecode> closed{g.identity()};
  while (closed.size() < g.order()) {
    ecode next = 0;
    bool found = false;
    for (ecode c : g.carrier()) {
      if (!std::binary_search(closed.begin(), closed.end(), c)) {
        next = c;
        found = true;
        break;
      }
    }
    if (!found) throw inconsistency_error("find_generators: scan failed");
    gens.push_back(next);
    closed = close_in(g, gens, s);
  }
  return gens;
}

Group centralizer(const Group& g, ecode x) {
  if (!g.contains(x))
    throw std::invalid_argument("centralizer: element not in group");
  auto carrier = kernels::centralizer_auto(*g.ops(), g.carrier(), x);
  return g.subgroup(std::move(carrier), {}, "centralizer");
}

Group center(const Group& g) {
  std::vector<ecode> gens = find_generators(g);
  std::vector<ecode> c = g.carrier();
  for (ecode gen : gens) {
    std::vector<ecode> keep;
    keep.reserve(c.size());
    for (ecode x : c)
      if (commute(*g.ops(), x, gen)) keep.push_back(x);
    c.swap(keep);
  }
  return g.subgroup(std::move(c), {}, "center");
}

std::vector<ClassInfo> conjugacy_classes(const Group& g) {
  const auto& carrier = g.carrier();
  const std::size_t n = carrier.size();
  std::vector<std::uint64_t> visited((n + 63) / 64, 0);
  std::vector<ClassInfo> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i >> 6] & (1ull << (i & 63))) continue;
    auto scan = kernels::class_scan_auto(*g.ops(), carrier, carrier[i]);
    for (std::size_t w = 0; w < visited.size(); ++w)
      visited[w] |= scan.class_bits[w];
    out.push_back({carrier[i], scan.class_size});
  }
  return out;
}

Group normal_closure(const Group& g, const std::vector<ecode>& seeds) {
  std::vector<ecode> gens;
  for (ecode x : seeds)
    if (x != g.identity() &&
        std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  std::vector<ecode> ggens = find_generators(g);
  Scratch s;
  std::vector<ecode> carrier = close_in(g, gens, s);
  for (;;) {
    bool grew = false;
    std::size_t snapshot = gens.size();
    for (ecode cg : ggens) {
      for (std::size_t i = 0; i < snapshot; ++i) {
        ecode c = g.mul(g.mul(cg, gens[i]), g.inv(cg));
        if (!std::binary_search(carrier.begin(), carrier.end(), c)) {
          gens.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) break;
    carrier = close_in(g, gens, s);
  }
  return g.subgroup(std::move(carrier), std::move(gens), "normal closure");
}

Group derived_subgroup(const Group& g) {
  std::vector<ecode> gens = find_generators(g);
  std::vector<ecode> seeds;
  for (ecode a : gens)
    for (ecode b : gens) {
      if (a == b) continue;
      ecode c = g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
      if (c != g.identity() &&
          std::find(seeds.begin(), seeds.end(), c) == seeds.end())
        seeds.push_back(c);
    }
  Group d = normal_closure(g, seeds);
  return g.subgroup(d.carrier(), d.generators(), "derived");
}

StructureProbe structure_probe(const Group& g) {
  StructureProbe p;
  p.order = g.order();
  auto classes = conjugacy_classes(g);
  std::map<std::uint64_t, std::uint64_t> sizes, orders;
  for (const auto& c : classes) {
    sizes[c.size] += 1;
    orders[g.element_order(c.rep)] += c.size;
    if (c.size == 1) p.center_order += 1;
  }
  p.class_sizes.assign(sizes.begin(), sizes.end());
  p.element_orders.assign(orders.begin(), orders.end());
  p.abelian = p.center_order == p.order;
  p.derived_order = p.abelian ? 1 : derived_subgroup(g).order();
  p.perfect = p.derived_order == p.order && p.order > 1;
  return p;
}

Fingerprint iso_fingerprint(const Group& g) {
  StructureProbe p = structure_probe(g);
  Fingerprint f;
  f.order = p.order;
  f.center_order = p.center_order;
  f.derived_order = p.derived_order;
  f.element_orders = std::move(p.element_orders);
  f.class_sizes = std::move(p.class_sizes);
  return f;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "o" << order << " z" << center_order << " d" << derived_order
     << " eo{";
  for (std::size_t i = 0; i < element_orders.size(); ++i)
    os << (i ? "," : "") << element_orders[i].first << ":"
       << element_orders[i].second;
  os << "} cs{";
  for (std::size_t i = 0; i < class_sizes.size(); ++i)
    os << (i ? "," : "") << class_sizes[i].first << ":"
       << class_sizes[i].second;
  os << "}";
  return os.str();
}

namespace {

class QuotientOps final : public ElementOps {
 public:
  QuotientOps(OpsPtr parent,
              std::shared_ptr<const std::unordered_map<ecode, ecode>> canon)
      : parent_(std::move(parent)), canon_(std::move(canon)) {}
  ecode mul(ecode a, ecode b) const override {
    return canon_->at(parent_->mul(a, b));
  }
  ecode inv(ecode a) const override { return canon_->at(parent_->inv(a)); }

 private:
  OpsPtr parent_;
  std::shared_ptr<const std::unordered_map<ecode, ecode>> canon_;
};

}  // namespace

Group quotient(const Group& g, const Group& n,
               std::unordered_map<ecode, ecode>* coset_map) {
  if (!is_subset(n.carrier(), g.carrier()))
    throw std::invalid_argument("quotient: subgroup not inside group");
  if (g.order() % n.order() != 0)
    throw inconsistency_error("quotient: order does not divide");
  std::vector<ecode> ggens = find_generators(g);
  for (ecode cg : ggens)
    for (ecode x : n.carrier())
      if (!n.contains(g.mul(g.mul(cg, x), g.inv(cg))))
        throw std::invalid_argument("quotient: subgroup is not normal");

  auto canon = std::make_shared<std::unordered_map<ecode, ecode>>();
  canon->reserve(g.order() * 2);
  std::vector<ecode> reps;
  for (ecode x : g.carrier()) {
    if (canon->count(x)) continue;
    // x is the smallest unassigned element, hence the minimum of its coset
    reps.push_back(x);
    for (ecode nn : n.carrier()) canon->emplace(g.mul(x, nn), x);
  }
  if (reps.size() != g.order() / n.order())
    throw inconsistency_error("quotient: bad coset count");

  std::vector<ecode> qgens;
  for (ecode cg : ggens) {
    ecode im = canon->at(cg);
    if (im != canon->at(g.identity()) &&
        std::find(qgens.begin(), qgens.end(), im) == qgens.end())
      qgens.push_back(im);
  }
  if (coset_map) *coset_map = *canon;
  auto ops = std::make_shared<QuotientOps>(
      g.ops(), std::shared_ptr<const std::unordered_map<ecode, ecode>>(canon));
  return Group(std::move(ops), std::move(reps), canon->at(g.identity()),
               std::move(qgens), g.label() + "/" + n.label());
}

namespace {

// Kernel condition: every nontrivial element of n has its full centralizer
// inside n.
bool kernel_condition(const Group& g, const Group& n) {
  for (ecode x : n.carrier()) {
    if (x == g.identity()) continue;
    for (ecode gg : g.carrier())
      if (commute(*g.ops(), gg, x) && !n.contains(gg)) return false;
  }
  return true;
}

std::optional<Group> find_complement(const Group& g, const Group& k,
                                     std::uint64_t pair_bound) {
  const std::uint64_t target = g.order() / k.order();
  Scratch s;
  for (ecode t : g.carrier()) {
    if (k.contains(t)) continue;
    std::vector<ecode> c = close_in(g, {t}, s);
    if (c.size() == target && intersect_sorted(c, k.carrier()).size() == 1)
      return g.subgroup(std::move(c), {t}, "complement");
  }
  if (g.order() <= pair_bound) {
    for (std::size_t i = 0; i < g.carrier().size(); ++i) {
      ecode t1 = g.carrier()[i];
      if (k.contains(t1)) continue;
      for (std::size_t j = i + 1; j < g.carrier().size(); ++j) {
        ecode t2 = g.carrier()[j];
        if (k.contains(t2)) continue;
        std::vector<ecode> c = close_in(g, {t1, t2}, s);
        if (c.size() == target && intersect_sorted(c, k.carrier()).size() == 1)
          return g.subgroup(std::move(c), {t1, t2}, "complement");
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FrobeniusDecomposition> frobenius_structure(
    const Group& g, std::uint64_t join_bound) {
  if (g.order() < 6) return std::nullopt;
  auto classes = conjugacy_classes(g);

  std::vector<Group> candidates;
  std::unordered_set<std::uint64_t> seen;
  auto add_candidate = [&](Group n) {
    if (n.order() <= 1 || n.order() >= g.order()) return;
    std::uint64_t h = hash_codes(n.carrier());
    if (!seen.insert(h).second) {
      for (const auto& c : candidates)
        if (c.carrier() == n.carrier()) return;
    }
    candidates.push_back(std::move(n));
  };
  for (const auto& c : classes) {
    if (c.rep == g.identity()) continue;
    add_candidate(normal_closure(g, {c.rep}));
  }
  if (g.order() <= join_bound) {
    // joins of class closures, to a fixed point
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (i == j) continue;
        std::vector<ecode> gens = candidates[i].generators();
        for (ecode x : candidates[j].generators()) gens.push_back(x);
        add_candidate(normal_closure(g, gens));
      }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Group& a, const Group& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.carrier() < b.carrier();
            });

  for (const auto& n : candidates) {
    if (g.order() % n.order() != 0) continue;
    if (!kernel_condition(g, n)) continue;
    auto h = find_complement(g, n, join_bound);
    if (!h)
      throw inconsistency_error(
          "frobenius: kernel found but complement search exhausted");
    return FrobeniusDecomposition{n, *h};
  }
  return std::nullopt;
}

std::vector<Group> all_subgroups(const Group& g, std::uint64_t bound) {
  if (g.order() > bound)
    throw bound_error("all_subgroups: order " + std::to_string(g.order()) +
                      " exceeds bound " + std::to_string(bound));

  struct Sub {
    std::vector<ecode> carrier;
    std::vector<ecode> gens;
  };
  std::vector<Sub> subs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;

  auto insert = [&](std::vector<ecode> carrier, std::vector<ecode> gens) {
    std::uint64_t h = hash_codes(carrier);
    auto& slot = index[h];
    for (std::size_t i : slot)
      if (subs[i].carrier == carrier) return;
    slot.push_back(subs.size());
    subs.push_back({std::move(carrier), std::move(gens)});
  };

  insert({g.identity()}, {});

  // cyclic subgroups, and the prime-power ones as join partners
  std::vector<std::pair<ecode, std::uint64_t>> partners;  // (gen, order)
  for (ecode x : g.carrier()) {
    if (x == g.identity()) continue;
    std::vector<ecode> c{g.identity()};
    ecode y = x;
    while (y != g.identity()) {
      c.push_back(y);
      y = g.mul(y, x);
    }
    std::uint64_t ord = c.size();
    std::sort(c.begin(), c.end());
    std::uint64_t h = hash_codes(c);
    auto& slot = index[h];
    bool fresh = true;
    for (std::size_t i : slot)
      if (subs[i].carrier == c) {
        fresh = false;
        break;
      }
    if (fresh) {
      slot.push_back(subs.size());
      subs.push_back({std::move(c), {x}});
      if (is_prime_power_u64(ord)) partners.emplace_back(x, ord);
    }
  }

  // join every known subgroup with every prime-power cyclic; any subgroup is
  // reachable this way one cyclic factor at a time
  Scratch s;
  for (std::size_t li = 0; li < subs.size(); ++li) {
    if (subs[li].carrier.size() == g.order()) continue;
    for (const auto& [x, xord] : partners) {
      const Sub& a = subs[li];  // note: reference invalidated by insert below
      if (std::binary_search(a.carrier.begin(), a.carrier.end(), x)) continue;
      std::vector<ecode> gens = a.gens;
      gens.push_back(x);
      std::vector<ecode> joined = close_in(g, gens, s);
      if (joined.size() == a.carrier.size()) continue;
      insert(std::move(joined), std::move(gens));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    if (a.carrier.size() != b.carrier.size())
      return a.carrier.size() < b.carrier.size();
    return a.carrier < b.carrier;
  });

  std::vector<Group> out;
  out.reserve(subs.size());
  for (auto& sub : subs)
    out.push_back(g.subgroup(std::move(sub.carrier), std::move(sub.gens)));
  return out;
}

std::vector<std::size_t> maximal_subgroups(const Group& g,
                                           const std::vector<Group>& subs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() >= g.order()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (subs[j].order() <= subs[i].order() || subs[j].order() >= g.order())
        continue;
      if (subs[j].order() % subs[i].order() != 0) continue;
      if (is_subset(subs[i].carrier(), subs[j].carrier())) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

Group sylow(const Group& g, std::uint64_t r) {
  if (!is_prime_u64(r)) throw std::invalid_argument("sylow: r must be prime");
  std::uint64_t target = 1;
  std::uint64_t n = g.order();
  while (n % r == 0) {
    n /= r;
    target *= r;
  }
  if (target == 1)
    return g.subgroup({g.identity()}, {}, "sylow");

  auto is_rpow = [&](std::uint64_t v) {
    while (v % r == 0) v /= r;
    return v == 1;
  };

  // all r-elements, and a starting element of maximal r-power order
  std::vector<ecode> relems;
  std::uint64_t best_ord = 1;
  ecode best = g.identity();
  for (ecode x : g.carrier()) {
    if (x == g.identity()) continue;
    std::uint64_t o = g.element_order(x);
    if (!is_rpow(o)) continue;
    relems.push_back(x);
    if (o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  if (relems.empty())
    throw inconsistency_error("sylow: no r-element although r divides order");

  Scratch s;
  std::vector<ecode> gens{best};
  std::vector<ecode> carrier = close_in(g, gens, s);
  while (carrier.size() < target) {
    bool grew = false;
    for (ecode y : relems) {
      if (std::binary_search(carrier.begin(), carrier.end(), y)) continue;
      bool normalizes = true;
      for (ecode pg : carrier)
        if (!std::binary_search(carrier.begin(), carrier.end(),
                                g.mul(g.mul(y, pg), g.inv(y)))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<ecode> cand_gens = gens;
      cand_gens.push_back(y);
      std::vector<ecode> cand = close_in(g, cand_gens, s);
      if (cand.size() > carrier.size() && is_rpow(cand.size())) {
        gens = std::move(cand_gens);
        carrier = std::move(cand);
        grew = true;
        break;
      }
    }
    if (!grew)
      throw inconsistency_error("sylow: growth stalled below full order");
  }
  return g.subgroup(std::move(carrier), std::move(gens), "sylow");
}

bool is_subset(const std::vector<ecode>& a, const std::vector<ecode>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace caforge
