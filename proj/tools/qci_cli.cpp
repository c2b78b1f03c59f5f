#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qci/suite.hpp"

namespace {

constexpr std::uint32_t kDefaultPMax = 13;
constexpr std::uint32_t kOverridePMax = 31;

struct InvalidInput {
  std::string message;
};

void check_p_limit(std::uint32_t p, bool allow_large) {
  if (p > kOverridePMax || (p > kDefaultPMax && !allow_large))
    throw InvalidInput{"p must be at most " + std::to_string(allow_large ? kOverridePMax : kDefaultPMax) +
                       (allow_large ? "" : " (use --allow-large to raise the limit to 31)")};
  if (p > kDefaultPMax) std::cerr << "warning: p > " << kDefaultPMax << " may take a long time\n";
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InvalidInput{"cannot write " + path};
  out << j.dump(2) << "\n";
}

int verify(std::uint32_t p, std::uint32_t e, std::optional<std::uint32_t> q, const std::string& json, bool allow_large) {
  try {
    qci::validate_qci_parameters(p, e, q);
  } catch (const qci::Error& err) {
    throw InvalidInput{err.what()};
  }
  check_p_limit(p, allow_large);
  qci::Report r = qci::full_report(p, e, q);
  std::cout << qci::to_text(r);
  write_json(json, qci::to_json(r));
  return r.all_pass() ? 0 : 1;
}

int scan(std::uint32_t p_max, const std::string& json, bool allow_large) {
  check_p_limit(p_max, allow_large);
  auto points = qci::grid_points(p_max);
  struct Result {
    qci::GridSummary summary;
    qci::Report report;
  };
  std::vector<std::future<Result>> jobs;
  for (auto [p, e] : points)
    jobs.push_back(std::async(std::launch::async, [p, e] {
      qci::QciLie ql = qci::hh1_qci(p, e);
      return Result{qci::summarize(ql), qci::full_report(ql)};
    }));

  std::ostringstream table;
  table << std::setw(4) << "p" << std::setw(4) << "e" << std::setw(7) << "dimL" << std::setw(7) << "L'"
        << std::setw(8) << "Z(L')" << std::setw(6) << "soc" << std::setw(10) << "abelian" << std::setw(8)
        << "brandt" << std::setw(8) << "socle" << std::setw(10) << "checks" << "\n";
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (auto& job : jobs) {
    Result res = job.get();
    const auto& s = res.summary;
    std::size_t passed = 0;
    for (const auto& c : res.report.checks) passed += c.pass;
    all = all && res.report.all_pass();
    table << std::setw(4) << s.p << std::setw(4) << s.e << std::setw(7) << s.dim_l << std::setw(7) << s.dim_derived
          << std::setw(8) << s.dim_derived_center << std::setw(6) << s.dim_socle << std::setw(10)
          << (s.derived_abelian ? "yes" : "no") << std::setw(8) << s.brandt_bound << std::setw(8) << s.socle_bound
          << std::setw(10) << (std::to_string(passed) + "/" + std::to_string(res.report.checks.size())) << "\n";
    nlohmann::json row = qci::to_json(s);
    row["report"] = qci::to_json(res.report);
    rows.push_back(std::move(row));
  }
  std::cout << table.str();
  write_json(json, nlohmann::json{{"p_max", p_max}, {"points", rows}});
  return all ? 0 : 1;
}

int lift(std::uint32_t p, const std::string& json) {
  if (!qci::is_prime(p) || p < 3) throw InvalidInput{"p must be an odd prime"};
  check_p_limit(p, false);
  qci::Report r = qci::lift_report(p);
  std::cout << qci::to_text(r);
  write_json(json, qci::to_json(r));
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for quantum complete intersections and their first Hochschild cohomology"};
  app.require_subcommand(1);
  std::string json;
  bool allow_large = false;
  std::uint32_t p = 0, e = 0, p_max = 0;
  std::optional<std::uint32_t> q;

  auto* v = app.add_subcommand("verify", "run every check for one (p, e)");
  v->add_option("--p", p, "odd prime")->required();
  v->add_option("--e", e, "order of q, divides p-1")->required();
  v->add_option("--q", q, "scalar of order e (default g^((p-1)/e))");
  v->add_option("--json", json, "write the report as JSON");
  v->add_flag("--allow-large", allow_large, "allow p up to 31");

  auto* s = app.add_subcommand("scan", "run all (p, e) with p <= p-max");
  s->add_option("--p-max", p_max, "largest prime")->required();
  s->add_option("--json", json, "write the summary and reports as JSON");
  s->add_flag("--allow-large", allow_large, "allow p-max up to 31");

  auto* l = app.add_subcommand("lift", "checks for the lifted algebra over Q");
  l->add_option("--p", p, "odd prime")->required();
  l->add_option("--json", json, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (v->parsed()) return verify(p, e, q, json, allow_large);
    if (s->parsed()) return scan(p_max, json, allow_large);
    return lift(p, json);
  } catch (const InvalidInput& err) {
    std::cerr << "error: " << err.message << "\n";
    return 2;
  } catch (const qci::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
