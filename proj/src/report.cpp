#include "caforge/report.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

namespace caforge {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const ReportRecord& r) {
  ordered_json j;
  j["q"] = r.q;
  j["p"] = r.p;
  j["m"] = r.m;
  j["predicate_answer"] = r.predicate_answer;
  j["predicate_reason"] = r.predicate_reason;
  j["computed_answer"] = r.computed_answer;
  j["method"] = r.method;
  j["agree"] = r.agree;
  ordered_json classes = ordered_json::array();
  for (const ClassEvidence& c : r.per_class) {
    ordered_json e;
    e["case_id"] = c.case_id;
    e["order"] = c.order;
    e["is_ca"] = c.ca;
    e["schmidt"] = c.schmidt;
    classes.push_back(e);
  }
  j["per_class"] = classes;
  j["wall_time_ms"] = r.wall_time_ms;
  j["engine_version"] = r.engine_version;
  return j.dump();
}

std::optional<ReportRecord> parse_json_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  ReportRecord r;
  try {
    r.q = j.at("q").get<std::uint64_t>();
    r.p = j.at("p").get<std::uint64_t>();
    r.m = j.at("m").get<std::uint32_t>();
    r.predicate_answer = j.at("predicate_answer").get<bool>();
    r.predicate_reason = j.at("predicate_reason").get<std::string>();
    r.computed_answer = j.at("computed_answer").get<bool>();
    r.method = j.at("method").get<std::string>();
    r.agree = j.at("agree").get<bool>();
    for (const auto& e : j.at("per_class")) {
      ClassEvidence c;
      c.case_id = e.at("case_id").get<int>();
      c.order = e.at("order").get<std::uint64_t>();
      c.ca = e.at("is_ca").get<bool>();
      c.schmidt = e.at("schmidt").get<std::string>();
      r.per_class.push_back(c);
    }
    r.wall_time_ms = j.at("wall_time_ms").get<std::uint64_t>();
    r.engine_version = j.at("engine_version").get<std::string>();
  } catch (const ordered_json::exception&) {
    return std::nullopt;
  }
  return r;
}

ReportCache::ReportCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // new cache file; created on first append
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto rec = parse_json_line(line);
    if (!rec) {
      std::cerr << "cache: skipping unreadable line " << lineno << " of "
                << path_ << "\n";
      continue;
    }
    entries_.try_emplace({rec->q, rec->method, rec->engine_version}, line);
  }
}

std::optional<std::string> ReportCache::lookup(std::uint64_t q,
                                               const std::string& method,
                                               const std::string& version) const {
  auto it = entries_.find({q, method, version});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ReportCache::append(const ReportRecord& r, const std::string& line) {
  if (!entries_.try_emplace({r.q, r.method, r.engine_version}, line).second)
    return;  // already stored; keep the first copy authoritative
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "cache: cannot append to " << path_ << "\n";
    return;
  }
  out << line << "\n";
}

}  // namespace caforge
