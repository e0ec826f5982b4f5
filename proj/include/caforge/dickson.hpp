#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caforge/field.hpp"
#include "caforge/group.hpp"

namespace caforge {

// One conjugacy-class family of maximal subgroups of PSL(2,q). Families 4, 5
// and 7 split into two classes fused by the diagonal outer automorphism.
struct MaximalClassSpec {
  int case_id = 0;  // 1..8
  std::uint64_t expected_order = 0;
  bool two_classes = false;
  std::uint32_t subfield_degree = 0;  // cases 7 and 8 only
  std::string description;
};

// The families whose arithmetic side conditions hold at q, ascending case id.
std::vector<MaximalClassSpec> applicable_classes(const Field& f);

// A concrete representative inside psl; order is checked against the
// family's expected order.
Group construct_class_rep(const Group& psl, FieldPtr f,
                          const MaximalClassSpec& spec);

// Conjugate of rep under the diagonal outer automorphism (conjugation by
// diag(u, 1) with u a non-square); hits the second class of a split family.
Group diagonal_twin(const Group& psl, const Field& f, const Group& rep);

struct CoverEntry {
  int case_id = 0;
  std::uint64_t order = 0;
  bool two_classes = false;
  std::size_t matched = 0;  // maximal subgroups conjugate to this rep or twin
};

struct CoverReport {
  bool ok = false;
  std::size_t maximal_count = 0;
  std::vector<CoverEntry> entries;
  std::vector<std::uint64_t> unmatched_orders;
};

// Exhaustively enumerates subgroups of PSL(2,q) and checks that every
// maximal one is conjugate to a constructed representative. Feasible for
// small q only (group order within the subgroup-enumeration bound).
CoverReport verify_cover(FieldPtr f);

}  // namespace caforge
