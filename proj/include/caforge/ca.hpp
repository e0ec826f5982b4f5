#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caforge/field.hpp"
#include "caforge/group.hpp"

namespace caforge {

struct CAReport {
  bool ca = false;
  // conjugacy classes examined before the verdict
  std::uint64_t classes_checked = 0;
  // on failure: a non-central element whose centralizer is non-abelian,
  // plus a non-commuting pair inside that centralizer
  std::optional<ecode> witness;
  std::optional<std::pair<ecode, ecode>> offenders;
};

// Walks conjugacy classes in ascending representative order and stops at the
// first non-central class whose centralizer is non-abelian.
CAReport ca_analyze(const Group& g);
bool is_ca(const Group& g);

enum class SchmidtCase {
  Abelian,
  Case1,  // abelian normal subgroup of prime index
  Case2,  // central quotient Frobenius, both preimages abelian
  Case3,  // central quotient Frobenius, kernel = (normal Sylow) * center
  Case4,  // central quotient Sym(4) with non-abelian Klein preimage
  Case5,  // direct product of a non-abelian p-group with an abelian group
  Case6,  // central quotient PSL/PGL(2,q'), derived subgroup SL(2,q')
  Case7,  // central quotient PSL/PGL(2,9), derived subgroup its Schur cover
  NotCA,
  Unknown
};
const char* to_string(SchmidtCase c);

struct SchmidtReport {
  SchmidtCase label = SchmidtCase::Unknown;
  std::string evidence;
};

// Structural classification of a group: Abelian / NotCA short-circuit, then
// the lowest matching case. Unknown means no case matched (which for a
// genuine CA group indicates a defect and is asserted against in tests).
// Throws bound_error for groups larger than order_bound.
SchmidtReport schmidt_case(const Group& g,
                           std::uint64_t order_bound = kDefaultOracleBound);

// Single-case probe used for targeted tests of case conditions that the
// lowest-case rule would otherwise shadow.
bool matches_schmidt_case(const Group& g, int case_id);

struct PredicateReport {
  bool value = false;
  std::string reason;
};

// Arithmetic criterion on q for PSL(2,q) to be a non-solvable group that is
// not CA while all its proper subgroups are. Throws std::invalid_argument
// if q is not a prime power.
PredicateReport theorem_predicate(std::uint64_t q);

struct ClassEvidence {
  int case_id = 0;  // maximal-subgroup family, or 0 for oracle enumeration
  std::uint64_t order = 0;
  bool ca = false;
  std::string schmidt;  // case label, or "skipped" above the order bound
};

struct VerifyResult {
  bool minimal_non_ca = false;
  bool group_non_ca = false;
  std::vector<ClassEvidence> per_class;
};

// Decides the minimal-non-CA property of PSL(2,q) from one representative
// per maximal-subgroup family (CA passes to subgroups and is conjugation
// invariant, so the representatives decide all proper subgroups).
VerifyResult is_minimal_non_ca_psl(FieldPtr f);

// Independent oracle: enumerates every subgroup and tests each directly.
VerifyResult brute_force_minimal_non_ca(const Group& g,
                                        std::uint64_t bound = kDefaultOracleBound);

}  // namespace caforge
