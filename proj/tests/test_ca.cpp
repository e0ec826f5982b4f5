#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "caforge/adapters.hpp"
#include "caforge/ca.hpp"
#include "caforge/field.hpp"
#include "caforge/group.hpp"
#include "caforge/linear.hpp"
#include "corpus.hpp"

using namespace caforge;

TEST_CASE("centralizer verdicts on reference groups") {
  CHECK(is_ca(cyclic(12)));
  CHECK(is_ca(dihedral(16)));
  CHECK(is_ca(quaternion8()));
  CHECK(is_ca(alt(5)));
  CHECK(is_ca(psl2(make_field(2, 3))));
  CHECK(is_ca(sl2(make_field(5, 1))));
  CHECK(!is_ca(sym(4)));
  CHECK(!is_ca(sym(5)));
  CHECK(!is_ca(psl2(make_field(7, 1))));
  CHECK(!is_ca(psl2(make_field(3, 2))));
}

TEST_CASE("failure reports carry usable witnesses") {
  Group s4 = sym(4);
  CAReport r = ca_analyze(s4);
  REQUIRE(!r.ca);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.offenders.has_value());
  // the witness is non-central and its centralizer contains the offenders,
  // which indeed do not commute
  Group c = centralizer(s4, *r.witness);
  CHECK(c.order() < s4.order());
  CHECK(c.order() > 1);
  auto [a, b] = *r.offenders;
  CHECK(c.contains(a));
  CHECK(c.contains(b));
  CHECK(s4.mul(a, b) != s4.mul(b, a));

  CAReport ok = ca_analyze(quaternion8());
  CHECK(ok.ca);
  CHECK(!ok.witness.has_value());
  CHECK(ok.classes_checked > 0);
}

TEST_CASE("classification labels across the corpus") {
  for (const auto& e : corpus::build()) {
    CAPTURE(e.name);
    SchmidtReport rep = schmidt_case(e.group);
    CHECK(rep.label == e.expected);
    CHECK(!rep.evidence.empty());
  }
}

TEST_CASE("a case label is assigned exactly for the CA groups") {
  for (const auto& e : corpus::build()) {
    CAPTURE(e.name);
    SchmidtReport rep = schmidt_case(e.group);
    bool labeled = rep.label != SchmidtCase::NotCA &&
                   rep.label != SchmidtCase::Unknown;
    CHECK(labeled == is_ca(e.group));
  }
}

TEST_CASE("single-case probes honor conditions the lowest match shadows") {
  Group g = direct_product(quaternion8(), cyclic(15));
  CHECK(matches_schmidt_case(g, 1));
  CHECK(matches_schmidt_case(g, 5));
  CHECK(!matches_schmidt_case(g, 4));
  CHECK(!matches_schmidt_case(g, 6));

  // degree-4 alternating group sits in both the index and the product cases
  CHECK(matches_schmidt_case(alt(4), 1));
  CHECK(!matches_schmidt_case(alt(4), 5));
  CHECK(matches_schmidt_case(frobenius20(), 2));
  CHECK(!matches_schmidt_case(frobenius20(), 1));
  CHECK(matches_schmidt_case(sl2(make_field(3, 1)), 3));
  CHECK(matches_schmidt_case(gl2_3(), 4));
  CHECK(!matches_schmidt_case(sym(4), 4));  // Klein preimage is abelian
}

TEST_CASE("subgroups of CA corpus groups stay CA") {
  // spot checks here; the acceptance suite runs the full corpus
  for (const char* name : {"dihedral-24", "sl2-3", "q8-x-c15", "frobenius-20"}) {
    for (const auto& e : corpus::build()) {
      if (e.name != name) continue;
      REQUIRE(is_ca(e.group));
      for (const Group& h : all_subgroups(e.group)) {
        CAPTURE(e.name);
        CAPTURE(h.order());
        CHECK(is_ca(h));
      }
    }
  }
}

TEST_CASE("arithmetic criterion values and reasons") {
  struct Row {
    std::uint64_t q;
    bool value;
    const char* reason;
  };
  const Row rows[] = {
      {4, false, "q<=5"},               {5, false, "q<=5"},
      {7, false, "16-divides-q2-1"},    {8, false, "no-clause"},
      {9, false, "exponent-not-odd-prime"}, {11, true, "prime-clause"},
      {13, true, "prime-clause"},       {16, false, "no-clause"},
      {17, false, "16-divides-q2-1"},   {19, true, "prime-clause"},
      {23, false, "16-divides-q2-1"},   {25, false, "exponent-not-odd-prime"},
      {27, true, "3^p-clause"},         {29, true, "prime-clause"},
      {31, false, "16-divides-q2-1"},   {32, false, "no-clause"},
      {37, true, "prime-clause"},       {41, false, "16-divides-q2-1"},
      {49, false, "no-clause"},         {81, false, "exponent-not-odd-prime"},
      {121, false, "no-clause"},        {125, true, "5^p-clause"},
      {243, true, "3^p-clause"},        {3125, true, "5^p-clause"},
      {59049, false, "exponent-not-odd-prime"},  // 3^10
      {2, false, "q<=5"},               {3, false, "q<=5"}};
  for (const Row& r : rows) {
    CAPTURE(r.q);
    PredicateReport p = theorem_predicate(r.q);
    CHECK(p.value == r.value);
    CHECK(p.reason == r.reason);
  }
  CHECK_THROWS_AS((void)theorem_predicate(6), std::invalid_argument);
  CHECK_THROWS_AS((void)theorem_predicate(12), std::invalid_argument);
  CHECK_THROWS_AS((void)theorem_predicate(0), std::invalid_argument);
}

TEST_CASE("the two decision procedures agree on small fields") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 2},
                      {5, 1}, {7, 1}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(m);
    FieldPtr f = make_field(p, m);
    VerifyResult fast = is_minimal_non_ca_psl(f);
    VerifyResult slow = brute_force_minimal_non_ca(psl2(f));
    CHECK(fast.minimal_non_ca == slow.minimal_non_ca);
    CHECK(fast.group_non_ca == slow.group_non_ca);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    CHECK(fast.minimal_non_ca == theorem_predicate(q).value);
  }
}

TEST_CASE("per-family evidence is recorded") {
  VerifyResult r = is_minimal_non_ca_psl(make_field(11, 1));
  CHECK(r.minimal_non_ca);
  CHECK(r.group_non_ca);
  REQUIRE(r.per_class.size() == 3);
  for (const auto& c : r.per_class) {
    CHECK(c.case_id > 0);
    CHECK(c.ca);
    CHECK(c.schmidt.substr(0, 4) == "Case");
  }

  VerifyResult bad = is_minimal_non_ca_psl(make_field(17, 1));
  CHECK(!bad.minimal_non_ca);
  CHECK(bad.group_non_ca);
  bool saw_non_ca = false;
  for (const auto& c : bad.per_class)
    if (!c.ca) {
      saw_non_ca = true;
      CHECK(c.schmidt == "NotCA");
    }
  CHECK(saw_non_ca);
}

TEST_CASE("perfectness probes") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 2},
                      {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    CHECK(structure_probe(psl2(make_field(p, m))).perfect);
  }
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 2},
                      {5, 1}, {7, 1}, {3, 2}}) {
    CHECK(structure_probe(sl2(make_field(p, m))).perfect);
  }
  CHECK(!structure_probe(alt(4)).perfect);
  CHECK(!structure_probe(sym(4)).perfect);
  CHECK(!structure_probe(borel_psl2(make_field(7, 1))).perfect);
}
