#include "masseylab/report.hpp"

#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "masseylab/error.hpp"

namespace masseylab {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::BudgetExceeded, Verdict::NotApplicable})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (budget == 0) fail(ErrorKind::BadParameter, "budget must be positive");
  if (jobs == 0) fail(ErrorKind::BadParameter, "jobs must be at least 1");
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("MASSEYLAB_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "masseylab";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "masseylab";
  return {};
}

std::size_t Report::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.verdict == v;
  return c;
}

int Report::exit_code() const {
  if (count(Verdict::Fails)) return 1;
  if (count(Verdict::BudgetExceeded)) return 2;
  return 0;
}

void write_records(std::ostream& out, const Report& r) {
  out << json{{"type", "header"}, {"schema", kReportSchema}, {"version", kVersion}, {"command", r.command},
              {"suite", r.suite}}
             .dump()
      << '\n';
  for (const auto& rec : r.records) {
    json line{{"type", "record"}, {"item", rec.item}, {"verdict", to_string(rec.verdict)}};
    line["detail"] = rec.detail.empty() ? json::object() : json::parse(rec.detail);
    out << line.dump() << '\n';
  }
  out << json{{"type", "summary"},
              {"records", r.records.size()},
              {"holds", r.count(Verdict::Holds)},
              {"fails", r.count(Verdict::Fails)},
              {"budget-exceeded", r.count(Verdict::BudgetExceeded)},
              {"not-applicable", r.count(Verdict::NotApplicable)}}
             .dump()
      << '\n';
}

void write_text(std::ostream& out, const Report& r) {
  out << r.command << '\n';
  for (const auto& rec : r.records) {
    out << "  [" << to_string(rec.verdict) << "] " << rec.item;
    if (!rec.detail.empty() && rec.detail != "{}") out << "  " << rec.detail;
    out << '\n';
  }
  out << r.records.size() << " records: " << r.count(Verdict::Holds) << " hold, " << r.count(Verdict::Fails)
      << " fail, " << r.count(Verdict::BudgetExceeded) << " over budget, " << r.count(Verdict::NotApplicable)
      << " not applicable";
  out << std::fixed << std::setprecision(3) << "  (" << r.seconds << " s" << (r.from_cache ? ", cached" : "") << ")\n";
}

void write_report(std::ostream& out, const Report& r, OutputFormat format) {
  if (format == OutputFormat::Records)
    write_records(out, r);
  else
    write_text(out, r);
}

Report read_records(std::istream& in) {
  Report r;
  std::string line;
  std::size_t lineno = 0;
  bool header = false, summary = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (j.value("schema", "") != kReportSchema)
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown schema");
      r.command = j.value("command", "");
      r.suite = j.value("suite", "");
      header = true;
    } else if (type == "record") {
      auto v = parse_verdict(j.value("verdict", ""));
      if (!v) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown verdict");
      r.records.push_back({j.value("item", ""), *v, j.contains("detail") ? j["detail"].dump() : "{}"});
    } else if (type == "summary") {
      summary = true;
    } else {
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown record type");
    }
  }
  if (!header || !summary) fail(ErrorKind::ParseError, "report is missing its header or summary");
  return r;
}

}  // namespace masseylab
