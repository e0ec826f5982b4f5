#pragma once

#include <cstdint>
#include <vector>

#include "caforge/group.hpp"

// The two scan kernels behind centralizer and conjugacy-class queries. Each
// has a serial reference implementation and an OpenMP version that partitions
// the carrier into contiguous index ranges; per-range results are merged in
// range order, so output is identical for any thread count. The *_auto entry
// points pick a path by carrier size.
namespace caforge::kernels {

// Below this carrier size the parallel path is never taken.
inline constexpr std::size_t kParallelCutoff = 1u << 14;

struct ClassScan {
  // Elements commuting with x, ascending.
  std::vector<ecode> centralizer;
  // Bitmap over carrier indices marking the conjugacy class of x.
  std::vector<std::uint64_t> class_bits;
  std::uint64_t class_size = 0;
};

ClassScan class_scan_serial(const ElementOps& ops,
                            const std::vector<ecode>& carrier, ecode x);
ClassScan class_scan_parallel(const ElementOps& ops,
                              const std::vector<ecode>& carrier, ecode x);
ClassScan class_scan_auto(const ElementOps& ops,
                          const std::vector<ecode>& carrier, ecode x);

std::vector<ecode> centralizer_serial(const ElementOps& ops,
                                      const std::vector<ecode>& carrier,
                                      ecode x);
std::vector<ecode> centralizer_parallel(const ElementOps& ops,
                                        const std::vector<ecode>& carrier,
                                        ecode x);
std::vector<ecode> centralizer_auto(const ElementOps& ops,
                                    const std::vector<ecode>& carrier,
                                    ecode x);

// First non-commuting pair (by scan order: i ascending, then j > i), or
// {0, 0} with found = false.
struct PairWitness {
  bool found = false;
  ecode a = 0, b = 0;
};
PairWitness find_noncommuting_pair(const ElementOps& ops,
                                   const std::vector<ecode>& elems);

}  // namespace caforge::kernels
