#include "caforge/kernels.hpp"

#include <algorithm>
#include <bit>

#include "caforge/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace caforge::kernels {
namespace {

std::size_t index_in(const std::vector<ecode>& carrier, ecode y) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), y);
  if (it == carrier.end() || *it != y)
    throw inconsistency_error("kernel scan: carrier not closed");
  return static_cast<std::size_t>(it - carrier.begin());
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

ClassScan class_scan_serial(const ElementOps& ops,
                            const std::vector<ecode>& carrier, ecode x) {
  const std::size_t n = carrier.size();
  ClassScan out;
  out.class_bits.assign((n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ecode g = carrier[i];
    ecode y = ops.mul(ops.mul(g, x), ops.inv(g));
    std::size_t idx = index_in(carrier, y);
    out.class_bits[idx >> 6] |= 1ull << (idx & 63);
    if (y == x) out.centralizer.push_back(g);
  }
  for (std::uint64_t w : out.class_bits) out.class_size += std::popcount(w);
  return out;
}

ClassScan class_scan_parallel(const ElementOps& ops,
                              const std::vector<ecode>& carrier, ecode x) {
  const std::size_t n = carrier.size();
  const std::size_t words = (n + 63) / 64;
  const int nt = thread_count();
  std::vector<std::vector<ecode>> cents(nt);
  std::vector<std::vector<std::uint64_t>> bits(nt);

#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
  {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
    auto& my_bits = bits[t];
    my_bits.assign(words, 0);
    auto& my_cent = cents[t];
    for (std::size_t i = lo; i < hi; ++i) {
      ecode g = carrier[i];
      ecode y = ops.mul(ops.mul(g, x), ops.inv(g));
      std::size_t idx = index_in(carrier, y);
      my_bits[idx >> 6] |= 1ull << (idx & 63);
      if (y == x) my_cent.push_back(g);
    }
  }

  ClassScan out;
  out.class_bits.assign(words, 0);
  for (int t = 0; t < nt; ++t) {
    for (std::size_t w = 0; w < words; ++w) out.class_bits[w] |= bits[t][w];
    // ranges are in index order, so concatenation stays sorted
    out.centralizer.insert(out.centralizer.end(), cents[t].begin(),
                           cents[t].end());
  }
  for (std::uint64_t w : out.class_bits) out.class_size += std::popcount(w);
  return out;
}

ClassScan class_scan_auto(const ElementOps& ops,
                          const std::vector<ecode>& carrier, ecode x) {
  if (carrier.size() >= kParallelCutoff && thread_count() > 1)
    return class_scan_parallel(ops, carrier, x);
  return class_scan_serial(ops, carrier, x);
}

std::vector<ecode> centralizer_serial(const ElementOps& ops,
                                      const std::vector<ecode>& carrier,
                                      ecode x) {
  std::vector<ecode> out;
  for (ecode g : carrier)
    if (ops.mul(g, x) == ops.mul(x, g)) out.push_back(g);
  return out;
}

std::vector<ecode> centralizer_parallel(const ElementOps& ops,
                                        const std::vector<ecode>& carrier,
                                        ecode x) {
  const std::size_t n = carrier.size();
  const int nt = thread_count();
  std::vector<std::vector<ecode>> cents(nt);

#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
  {
#ifdef _OPENMP
    const int t = omp_get_thread_num();
#else
    const int t = 0;
#endif
    std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
    auto& my_cent = cents[t];
    for (std::size_t i = lo; i < hi; ++i) {
      ecode g = carrier[i];
      if (ops.mul(g, x) == ops.mul(x, g)) my_cent.push_back(g);
    }
  }

  std::vector<ecode> out;
  for (int t = 0; t < nt; ++t)
    out.insert(out.end(), cents[t].begin(), cents[t].end());
  return out;
}

std::vector<ecode> centralizer_auto(const ElementOps& ops,
                                    const std::vector<ecode>& carrier,
                                    ecode x) {
  if (carrier.size() >= kParallelCutoff && thread_count() > 1)
    return centralizer_parallel(ops, carrier, x);
  return centralizer_serial(ops, carrier, x);
}

PairWitness find_noncommuting_pair(const ElementOps& ops,
                                   const std::vector<ecode>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (ops.mul(elems[i], elems[j]) != ops.mul(elems[j], elems[i]))
        return {true, elems[i], elems[j]};
  return {};
}

}  // namespace caforge::kernels
