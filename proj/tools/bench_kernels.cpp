// Times the serial reference kernels against the OpenMP variants on
// projective groups of increasing size. The two must agree element for
// element; this tool only reports wall time and a cross-check verdict.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <vector>

#include "caforge/group.hpp"
#include "caforge/kernels.hpp"
#include "caforge/linear.hpp"

namespace {

using namespace caforge;
using namespace caforge::kernels;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Sample {
  std::uint64_t q;
  std::uint64_t order;
  double serial_ms;
  double parallel_ms;
  bool agree;
};

Sample bench_one(std::uint32_t p, std::uint32_t m, std::size_t probes) {
  Group g = psl2(make_field(p, m));
  const std::vector<ecode>& carrier = g.carrier();
  // Probe elements spread across the carrier; index 0 is the identity, skip it.
  std::vector<ecode> picks;
  for (std::size_t i = 1; i <= probes; ++i)
    picks.push_back(carrier[i * (carrier.size() - 1) / probes]);

  bool agree = true;
  const auto t_serial = Clock::now();
  std::vector<ClassScan> serial;
  for (ecode x : picks) serial.push_back(class_scan_serial(*g.ops(), carrier, x));
  const double serial_ms = ms_since(t_serial);

  const auto t_parallel = Clock::now();
  for (std::size_t i = 0; i < picks.size(); ++i) {
    ClassScan par = class_scan_parallel(*g.ops(), carrier, picks[i]);
    if (par.centralizer != serial[i].centralizer ||
        par.class_bits != serial[i].class_bits ||
        par.class_size != serial[i].class_size)
      agree = false;
  }
  const double parallel_ms = ms_since(t_parallel);

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  return {q, g.order(), serial_ms, parallel_ms, agree};
}

}  // namespace

int main() {
  std::cout << "class scans, 8 probe elements per group\n";
  std::cout << std::setw(6) << "q" << std::setw(10) << "order" << std::setw(14)
            << "serial ms" << std::setw(14) << "parallel ms" << std::setw(10)
            << "speedup" << std::setw(8) << "agree" << "\n";
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {
      {5, 2}, {7, 2}, {3, 4}, {11, 2}};
  bool all_agree = true;
  for (auto [p, m] : cases) {
    Sample s = bench_one(p, m, 8);
    all_agree = all_agree && s.agree;
    std::cout << std::setw(6) << s.q << std::setw(10) << s.order
              << std::setw(14) << std::fixed << std::setprecision(2)
              << s.serial_ms << std::setw(14) << s.parallel_ms << std::setw(10)
              << std::setprecision(2) << s.serial_ms / s.parallel_ms
              << std::setw(8) << (s.agree ? "yes" : "NO") << "\n";
  }
  return all_agree ? 0 : 1;
}
