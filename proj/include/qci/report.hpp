#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qci {

struct Check {
  std::string id;
  std::string paper_ref;  // the statement being checked
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

struct Report {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  /// Records a check that passes iff expected == computed.
  void equal(std::string id, std::string ref, nlohmann::json expected, nlohmann::json computed) {
    bool ok = expected == computed;
    checks.push_back({std::move(id), std::move(ref), std::move(expected), std::move(computed), ok});
  }

  /// Records a check with an explicit verdict.
  void verdict(std::string id, std::string ref, nlohmann::json expected, nlohmann::json computed, bool ok) {
    checks.push_back({std::move(id), std::move(ref), std::move(expected), std::move(computed), ok});
  }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

inline nlohmann::json to_json(const Check& c) {
  return {{"id", c.id}, {"paper_ref", c.paper_ref}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

/// nlohmann::json keeps object keys sorted, so the rendering is deterministic.
inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"p", r.p}, {"e", r.e}, {"q", r.q}, {"checks", checks}};
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "p=" << r.p << " e=" << r.e << " q=" << r.q << "\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  expected=" << c.expected.dump()
        << " computed=" << c.computed.dump() << "\n";
    passed += c.pass;
  }
  out << passed << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace qci
