#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace masseylab {

inline constexpr const char* kReportSchema = "masseylab.report/1";
inline constexpr const char* kVersion = "0.1.0";

enum class Verdict { Holds, Fails, BudgetExceeded, NotApplicable };
std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& s);

enum class OutputFormat { Text, Records };

struct RunConfig {
  std::string group = "V4";
  std::uint32_t p = 2;
  std::uint32_t n = 3;
  std::uint32_t m = 4;
  std::uint32_t k = 2;
  std::uint64_t budget = 50'000'000;  // search nodes per record
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;  // 0 = exhaustive where a suite samples
  OutputFormat format = OutputFormat::Text;
  bool use_cache = true;
  std::filesystem::path cache_dir;  // empty: no cache

  /// Throws BadParameter unless budget > 0 and jobs >= 1.
  void validate() const;
};

/// Cache directory from MASSEYLAB_CACHE_DIR, else $XDG_CACHE_HOME/masseylab,
/// else ~/.cache/masseylab; empty when none can be determined.
std::filesystem::path default_cache_dir();

struct Record {
  std::string item;
  Verdict verdict = Verdict::Holds;
  std::string detail;  // compact JSON object
};

struct Report {
  std::string command;  // canonical echo, independent of --jobs and caching
  std::string suite;
  std::vector<Record> records;
  double seconds = 0;  // text output only
  bool from_cache = false;

  std::size_t count(Verdict v) const;
  /// 0 all hold, 1 any fail, 2 budget exceeded (and nothing failed).
  int exit_code() const;
};

/// Line-delimited JSON: header, one line per record, summary.
void write_records(std::ostream& out, const Report& r);
void write_text(std::ostream& out, const Report& r);
void write_report(std::ostream& out, const Report& r, OutputFormat format);
/// Inverse of write_records; throws ParseError.
Report read_records(std::istream& in);

}  // namespace masseylab
