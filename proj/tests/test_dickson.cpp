#include <doctest.h>

#include <map>
#include <vector>

#include "caforge/adapters.hpp"
#include "caforge/dickson.hpp"
#include "caforge/field.hpp"
#include "caforge/group.hpp"
#include "caforge/linear.hpp"

using namespace caforge;

namespace {

std::map<int, std::uint64_t> class_orders(const Field& f) {
  std::map<int, std::uint64_t> out;
  for (const auto& spec : applicable_classes(f)) out[spec.case_id] = spec.expected_order;
  return out;
}

}  // namespace

TEST_CASE("applicable families per field") {
  using M = std::map<int, std::uint64_t>;
  CHECK(class_orders(Field(2, 2)) == M{{1, 12}, {2, 6}, {3, 10}, {8, 6}});
  CHECK(class_orders(Field(5, 1)) == M{{1, 10}, {3, 6}, {6, 12}});
  CHECK(class_orders(Field(7, 1)) == M{{1, 21}, {5, 24}});
  CHECK(class_orders(Field(3, 2)) == M{{1, 36}, {4, 60}, {7, 24}});
  CHECK(class_orders(Field(11, 1)) == M{{1, 55}, {3, 12}, {4, 60}});
  CHECK(class_orders(Field(13, 1)) == M{{1, 78}, {2, 12}, {3, 14}, {6, 12}});
  CHECK(class_orders(Field(17, 1)) == M{{1, 136}, {2, 16}, {3, 18}, {5, 24}});
  CHECK(class_orders(Field(2, 4)) == M{{1, 240}, {2, 30}, {3, 34}, {8, 60}});
  CHECK(class_orders(Field(3, 3)) ==
        M{{1, 351}, {2, 26}, {3, 28}, {8, 12}});
  CHECK(class_orders(Field(5, 3)) ==
        M{{1, 7750}, {2, 124}, {3, 126}, {8, 60}});
  CHECK_THROWS_AS((void)applicable_classes(Field(3, 1)), std::invalid_argument);
}

TEST_CASE("family list is ordered and marks split classes") {
  Field f(3, 2);
  auto specs = applicable_classes(f);
  for (std::size_t i = 1; i < specs.size(); ++i)
    CHECK(specs[i - 1].case_id < specs[i].case_id);
  for (const auto& s : specs) {
    CHECK(!s.description.empty());
    // at q = 9 both the degree-5 alternating and subfield families split
    if (s.case_id == 4 || s.case_id == 7) CHECK(s.two_classes);
    if (s.case_id == 1) CHECK(!s.two_classes);
  }
}

TEST_CASE("constructed representatives match reference groups") {
  {
    FieldPtr f = make_field(7, 1);
    Group psl = psl2(f);
    for (const auto& spec : applicable_classes(*f)) {
      Group rep = construct_class_rep(psl, f, spec);
      CHECK(rep.order() == spec.expected_order);
      CHECK(is_subset(rep.carrier(), psl.carrier()));
      if (spec.case_id == 5)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(sym(4)));
    }
  }
  {
    FieldPtr f = make_field(11, 1);
    Group psl = psl2(f);
    for (const auto& spec : applicable_classes(*f)) {
      Group rep = construct_class_rep(psl, f, spec);
      CHECK(rep.order() == spec.expected_order);
      if (spec.case_id == 3)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(dihedral(12)));
      if (spec.case_id == 4)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(alt(5)));
    }
  }
  {
    FieldPtr f = make_field(13, 1);
    Group psl = psl2(f);
    for (const auto& spec : applicable_classes(*f)) {
      Group rep = construct_class_rep(psl, f, spec);
      CHECK(rep.order() == spec.expected_order);
      if (spec.case_id == 6)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(alt(4)));
    }
  }
  {
    // characteristic 2: the torus normalizers are dihedral too
    FieldPtr f = make_field(2, 4);
    Group psl = psl2(f);
    for (const auto& spec : applicable_classes(*f)) {
      Group rep = construct_class_rep(psl, f, spec);
      CHECK(rep.order() == spec.expected_order);
      if (spec.case_id == 2)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(dihedral(30)));
      if (spec.case_id == 3)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(dihedral(34)));
      if (spec.case_id == 8)
        CHECK(iso_fingerprint(rep) == iso_fingerprint(alt(5)));
    }
  }
}

TEST_CASE("subfield representative at q = 9 is the projective general group") {
  FieldPtr f = make_field(3, 2);
  Group psl = psl2(f);
  for (const auto& spec : applicable_classes(*f))
    if (spec.case_id == 7) {
      Group rep = construct_class_rep(psl, f, spec);
      CHECK(iso_fingerprint(rep) == iso_fingerprint(sym(4)));
    }
}

TEST_CASE("diagonal twin lands in the other conjugacy class") {
  FieldPtr f = make_field(3, 2);
  Group psl = psl2(f);
  for (const auto& spec : applicable_classes(*f)) {
    if (!spec.two_classes) continue;
    Group rep = construct_class_rep(psl, f, spec);
    Group twin = diagonal_twin(psl, *f, rep);
    CHECK(twin.order() == rep.order());
    CHECK(is_subset(twin.carrier(), psl.carrier()));
    CHECK(iso_fingerprint(twin) == iso_fingerprint(rep));
    // distinct carriers: the twin is a different subgroup
    CHECK(twin.carrier() != rep.carrier());
  }
  // characteristic 2 has no diagonal twist
  FieldPtr f4 = make_field(2, 2);
  Group psl4 = psl2(f4);
  Group b = construct_class_rep(psl4, f4, applicable_classes(*f4)[0]);
  CHECK(diagonal_twin(psl4, *f4, b).carrier() == b.carrier());
}

TEST_CASE("every maximal subgroup is conjugate to a constructed one") {
  {
    CoverReport r = verify_cover(make_field(5, 1));
    CHECK(r.ok);
    CHECK(r.maximal_count == 21);
    CHECK(r.unmatched_orders.empty());
    std::map<int, std::size_t> matched;
    for (const auto& e : r.entries) matched[e.case_id] = e.matched;
    CHECK(matched == std::map<int, std::size_t>{{1, 6}, {3, 10}, {6, 5}});
  }
  {
    CoverReport r = verify_cover(make_field(7, 1));
    CHECK(r.ok);
    CHECK(r.maximal_count == 22);
    std::map<int, std::size_t> matched;
    for (const auto& e : r.entries) matched[e.case_id] = e.matched;
    CHECK(matched == std::map<int, std::size_t>{{1, 8}, {5, 14}});
  }
  {
    CoverReport r = verify_cover(make_field(3, 2));
    CHECK(r.ok);
    CHECK(r.maximal_count == 52);
    std::map<int, std::size_t> matched;
    for (const auto& e : r.entries) matched[e.case_id] = e.matched;
    CHECK(matched == std::map<int, std::size_t>{{1, 10}, {4, 12}, {7, 30}});
  }
}
