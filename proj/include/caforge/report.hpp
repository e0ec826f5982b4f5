#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "caforge/ca.hpp"

namespace caforge {

struct ReportRecord {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  bool predicate_answer = false;
  std::string predicate_reason;
  bool computed_answer = false;
  std::string method;  // "oracle" or "maximal-class"
  bool agree = false;
  std::vector<ClassEvidence> per_class;
  std::uint64_t wall_time_ms = 0;
  std::string engine_version;
};

// One line of JSON with a fixed key order; the serialized form is the cache
// storage format and the --json output format.
std::string to_json_line(const ReportRecord& r);
std::optional<ReportRecord> parse_json_line(const std::string& line);

// Append-only line cache keyed by (q, method, engine version). Lookups
// return the stored line verbatim, so replayed output (including timing
// fields) is byte-stable across runs.
class ReportCache {
 public:
  // Loads existing entries; lines that do not parse are skipped with a
  // warning on stderr. The first line for a key wins.
  explicit ReportCache(std::string path);
  std::optional<std::string> lookup(std::uint64_t q, const std::string& method,
                                    const std::string& version) const;
  // Stores the line in memory and appends it to the backing file.
  void append(const ReportRecord& r, const std::string& line);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::tuple<std::uint64_t, std::string, std::string>, std::string>
      entries_;
};

}  // namespace caforge
