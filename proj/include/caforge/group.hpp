#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace caforge {

// Group element code. Adapters pack their natural representation into one
// integer; code order is the canonical element order everywhere.
using ecode = std::uint64_t;

inline constexpr std::uint64_t kDefaultGroupBound = 1ull << 24;
inline constexpr std::uint64_t kDefaultOracleBound = 1200;

// Multiplication and inversion on element codes. Implementations must be
// total on the carrier they are used with, associative, and consistent with
// the group identity. Stateless after construction; safe to share across
// threads.
struct ElementOps {
  virtual ~ElementOps() = default;
  virtual ecode mul(ecode a, ecode b) const = 0;
  virtual ecode inv(ecode a) const = 0;
};

using OpsPtr = std::shared_ptr<const ElementOps>;

// An enumerated finite group: sorted carrier of codes plus the ops that act
// on them. Value type; copies share the ops object.
class Group {
 public:
  Group() = default;
  Group(OpsPtr ops, std::vector<ecode> carrier_sorted, ecode identity,
        std::vector<ecode> generators = {}, std::string label = "");

  std::uint64_t order() const { return carrier_.size(); }
  const std::vector<ecode>& carrier() const { return carrier_; }
  ecode identity() const { return identity_; }
  const OpsPtr& ops() const { return ops_; }
  const std::string& label() const { return label_; }

  // Generating set when one is known from construction; may be empty.
  const std::vector<ecode>& generators() const { return generators_; }

  ecode mul(ecode a, ecode b) const { return ops_->mul(a, b); }
  ecode inv(ecode a) const { return ops_->inv(a); }
  bool contains(ecode x) const;
  std::size_t index_of(ecode x) const;  // rejects absent codes
  std::uint64_t element_order(ecode x) const;

  // Same ops, smaller carrier.
  Group subgroup(std::vector<ecode> carrier_sorted,
                 std::vector<ecode> generators = {},
                 std::string label = "") const;

 private:
  OpsPtr ops_;
  std::vector<ecode> carrier_;
  ecode identity_ = 0;
  std::vector<ecode> generators_;
  std::string label_;
};

struct ClassInfo {
  ecode rep;           // smallest code in the class
  std::uint64_t size;
};

struct StructureProbe {
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  bool abelian = false;
  bool perfect = false;
  // (value, multiplicity) pairs, ascending by value.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_sizes;
};

// Documented isomorphism proxy: equal fingerprints do not prove isomorphism,
// distinct fingerprints refute it. Good enough to recognize the handful of
// reference groups this engine compares against.
struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_sizes;

  auto operator<=>(const Fingerprint&) const = default;
  std::string to_string() const;  // compact single-line form
};

struct FrobeniusDecomposition {
  Group kernel;
  Group complement;
};

// Breadth-first closure of the generators under mul. Throws bound_error once
// the closure exceeds bound.
Group close(OpsPtr ops, ecode identity, const std::vector<ecode>& generators,
            std::uint64_t bound = kDefaultGroupBound, std::string label = "");

// Generating set for G: the recorded one, else grown greedily by adjoining
// the smallest element outside the running closure.
std::vector<ecode> find_generators(const Group& g);

Group centralizer(const Group& g, ecode x);
Group center(const Group& g);

// Classes ordered by representative code; reps are class minima.
std::vector<ClassInfo> conjugacy_classes(const Group& g);

// Smallest normal subgroup containing the seeds.
Group normal_closure(const Group& g, const std::vector<ecode>& seeds);

Group derived_subgroup(const Group& g);

StructureProbe structure_probe(const Group& g);
Fingerprint iso_fingerprint(const Group& g);

// G/N for normal N. Cosets are coded by their smallest member. If coset_map
// is given it receives the projection code -> coset code for every element.
Group quotient(const Group& g, const Group& n,
               std::unordered_map<ecode, ecode>* coset_map = nullptr);

// Searches proper nontrivial normal subgroups (normal closures of class
// representatives; their joins too when |G| is within join_bound) for a
// Frobenius kernel, then builds a complement from transversal elements.
std::optional<FrobeniusDecomposition> frobenius_structure(
    const Group& g, std::uint64_t join_bound = kDefaultOracleBound);

// Every subgroup, reached by joining the cyclic subgroups to a fixed point.
// Result is sorted by (order, carrier). Guarded by the bound.
std::vector<Group> all_subgroups(const Group& g,
                                 std::uint64_t bound = kDefaultOracleBound);

// Indices into subs of the subgroups maximal among proper ones.
std::vector<std::size_t> maximal_subgroups(const Group& g,
                                           const std::vector<Group>& subs);

// Sylow r-subgroup, grown greedily from an element of maximal r-power order
// by adjoining normalizing r-elements. Trivial group when r does not divide
// |G|.
Group sylow(const Group& g, std::uint64_t r);

bool is_subset(const std::vector<ecode>& a, const std::vector<ecode>& b);

}  // namespace caforge
