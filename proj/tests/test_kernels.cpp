#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "caforge/adapters.hpp"
#include "caforge/field.hpp"
#include "caforge/group.hpp"
#include "caforge/kernels.hpp"
#include "caforge/linear.hpp"
#include "caforge/suzuki.hpp"

using namespace caforge;
using namespace caforge::kernels;

namespace {

std::uint64_t popcount_bits(const std::vector<std::uint64_t>& bits) {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits) n += std::popcount(w);
  return n;
}

void check_scan_pair(const Group& g, ecode x) {
  const auto& c = g.carrier();
  ClassScan s = class_scan_serial(*g.ops(), c, x);
  ClassScan p = class_scan_parallel(*g.ops(), c, x);
  CHECK(s.centralizer == p.centralizer);
  CHECK(s.class_bits == p.class_bits);
  CHECK(s.class_size == p.class_size);
  ClassScan a = class_scan_auto(*g.ops(), c, x);
  CHECK(a.centralizer == s.centralizer);
  CHECK(a.class_size == s.class_size);

  CHECK(centralizer_serial(*g.ops(), c, x) == s.centralizer);
  CHECK(centralizer_parallel(*g.ops(), c, x) == s.centralizer);
  CHECK(centralizer_auto(*g.ops(), c, x) == s.centralizer);

  // orbit-stabilizer: |class| * |centralizer| = |G|
  CHECK(s.class_size * s.centralizer.size() == g.order());
  CHECK(popcount_bits(s.class_bits) == s.class_size);
  // the marked elements really are conjugates of x; cross-check a few
  std::size_t seen = 0;
  for (std::size_t i = 0; i < c.size() && seen < 5; ++i)
    if (s.class_bits[i / 64] >> (i % 64) & 1) {
      ++seen;
      bool conj = false;
      for (ecode t : c)
        if (g.mul(g.mul(t, x), g.inv(t)) == c[i]) {
          conj = true;
          break;
        }
      CHECK(conj);
    }
}

}  // namespace

TEST_CASE("serial and parallel scans agree") {
  Group s4 = sym(4);
  for (std::size_t i = 0; i < s4.order(); i += 5)
    check_scan_pair(s4, s4.carrier()[i]);

  Group psl = psl2(make_field(11, 1));
  for (std::size_t i = 1; i < psl.order(); i += 97)
    check_scan_pair(psl, psl.carrier()[i]);

  Group sz = suzuki_point_stabilizer(1);
  for (std::size_t i = 0; i < sz.order(); i += 61)
    check_scan_pair(sz, sz.carrier()[i]);
}

TEST_CASE("scan of the identity covers only the identity") {
  Group g = alt(5);
  ClassScan s = class_scan_serial(*g.ops(), g.carrier(), g.identity());
  CHECK(s.class_size == 1);
  CHECK(s.centralizer.size() == g.order());
  CHECK(s.centralizer == g.carrier());
}

TEST_CASE("transposition class in Sym(4)") {
  Group s4 = sym(4);
  PermOps ops(4);
  ClassScan s = class_scan_auto(*s4.ops(), s4.carrier(), ops.pack({1, 0, 2, 3}));
  CHECK(s.class_size == 6);
  CHECK(s.centralizer.size() == 4);
}

TEST_CASE("first non-commuting pair") {
  Group s3 = sym(3);
  PairWitness w = find_noncommuting_pair(*s3.ops(), s3.carrier());
  REQUIRE(w.found);
  CHECK(s3.mul(w.a, w.b) != s3.mul(w.b, w.a));
  // scan order: no pair with both indices earlier fails to commute
  const auto& c = s3.carrier();
  std::size_t ia = s3.index_of(w.a), ib = s3.index_of(w.b);
  for (std::size_t i = 0; i <= ia; ++i)
    for (std::size_t j = i + 1; j < (i == ia ? ib : c.size()); ++j)
      CHECK(s3.mul(c[i], c[j]) == s3.mul(c[j], c[i]));

  PairWitness none = find_noncommuting_pair(*cyclic(12).ops(),
                                            cyclic(12).carrier());
  CHECK(!none.found);
}

TEST_CASE("deterministic across repeated runs") {
  Group g = psl2(make_field(3, 2));
  ecode x = g.carrier()[7];
  ClassScan first = class_scan_parallel(*g.ops(), g.carrier(), x);
  for (int i = 0; i < 3; ++i) {
    ClassScan again = class_scan_parallel(*g.ops(), g.carrier(), x);
    CHECK(again.centralizer == first.centralizer);
    CHECK(again.class_bits == first.class_bits);
  }
}
