#include <doctest.h>

#include <cstdint>
#include <set>

#include "caforge/ca.hpp"
#include "caforge/field.hpp"
#include "caforge/group.hpp"
#include "caforge/suzuki.hpp"

using namespace caforge;

TEST_CASE("twist packing and the half-frobenius") {
  FieldPtr f8 = make_field(2, 3);
  SuzukiOps ops(f8, 1);
  CHECK(ops.r() == 8);
  for (fe l = 1; l < 8; ++l)
    for (fe a = 0; a < 8; ++a)
      for (fe b = 0; b < 8; ++b) {
        ecode c = ops.pack(l, a, b);
        fe l2, a2, b2;
        ops.unpack(c, l2, a2, b2);
        CHECK(l2 == l);
        CHECK(a2 == a);
        CHECK(b2 == b);
      }
  // theta composed with itself is the squaring map
  for (fe x = 0; x < 8; ++x) {
    CHECK(ops.theta(ops.theta(x)) == f8->mul(x, x));
    CHECK(ops.theta(x) == f8->pow(x, 4));
  }
  // theta is multiplicative
  for (fe x = 0; x < 8; ++x)
    for (fe y = 0; y < 8; ++y)
      CHECK(ops.theta(f8->mul(x, y)) == f8->mul(ops.theta(x), ops.theta(y)));
}

TEST_CASE("stabilizer is a group under the twisted law") {
  Group g = suzuki_point_stabilizer(1);
  CHECK(g.order() == 448);
  ecode id = g.identity();
  SuzukiOps ops(make_field(2, 3), 1);
  CHECK(id == ops.pack(1, 0, 0));
  for (ecode x : g.carrier()) {
    CHECK(g.mul(x, id) == x);
    CHECK(g.mul(id, x) == x);
    CHECK(g.mul(x, g.inv(x)) == id);
    CHECK(g.contains(g.inv(x)));
  }
  // associativity on a spread of triples
  const auto& c = g.carrier();
  for (std::size_t i = 0; i < c.size(); i += 37)
    for (std::size_t j = 1; j < c.size(); j += 53)
      for (std::size_t k = 2; k < c.size(); k += 71)
        CHECK(g.mul(c[i], g.mul(c[j], c[k])) ==
              g.mul(g.mul(c[i], c[j]), c[k]));
  // closure under multiplication
  for (std::size_t i = 0; i < c.size(); i += 11)
    for (std::size_t j = 0; j < c.size(); j += 13)
      CHECK(g.contains(g.mul(c[i], c[j])));
}

TEST_CASE("frobenius shape over GF(8)") {
  SuzukiLemmaReport rep = verify_suzuki_lemma(1);
  CHECK(rep.ok);
  CHECK(rep.r == 8);
  CHECK(rep.order == 448);
  CHECK(rep.degree == 65);
  CHECK(rep.kernel_order == 64);
  CHECK(rep.kernel_non_abelian);
  REQUIRE(rep.kernel_witness.has_value());
  CHECK(rep.kernel_witness->first == 72);   // (1, 1, 0)
  CHECK(rep.kernel_witness->second == 80);  // (1, 2, 0)
  CHECK(rep.kernel_center_order == 8);
  CHECK(rep.kernel_center_expected);
  CHECK(rep.kernel_exponent == 4);
  CHECK(rep.complement_order == 7);
  CHECK(rep.complement_cyclic);
  CHECK(!rep.stabilizer_ca);

  // and the witness really fails to commute inside the stabilizer
  Group g = suzuki_point_stabilizer(1);
  CHECK(g.mul(72, 80) != g.mul(80, 72));
}

TEST_CASE("frobenius shape over GF(32)") {
  SuzukiLemmaReport rep = verify_suzuki_lemma(2);
  CHECK(rep.ok);
  CHECK(rep.r == 32);
  CHECK(rep.order == 31744);
  CHECK(rep.degree == 1025);
  CHECK(rep.kernel_order == 1024);
  CHECK(rep.kernel_center_order == 32);
  CHECK(rep.kernel_exponent == 4);
  CHECK(rep.complement_order == 31);
  CHECK(rep.complement_cyclic);
  CHECK(!rep.stabilizer_ca);
}

TEST_CASE("kernel squares land in the center") {
  // order <= 2 off-center, exponent 4 overall: squaring kills the twist part
  Group g = suzuki_point_stabilizer(1);
  SuzukiOps ops(make_field(2, 3), 1);
  for (fe a = 0; a < 8; ++a)
    for (fe b = 0; b < 8; ++b) {
      ecode x = ops.pack(1, a, b);
      ecode sq = g.mul(x, x);
      fe l2, a2, b2;
      ops.unpack(sq, l2, a2, b2);
      CHECK(l2 == 1);
      CHECK(a2 == 0);  // square sits in {(1, 0, *)}
    }
}

TEST_CASE("stabilizer rejects degenerate parameters") {
  CHECK_THROWS_AS((void)suzuki_point_stabilizer(0), std::invalid_argument);
  CHECK_THROWS_AS(SuzukiOps(make_field(3, 3), 1), std::invalid_argument);
  CHECK_THROWS_AS(SuzukiOps(make_field(2, 4), 1), std::invalid_argument);
}
