#ifndef EFFSPEC_TOOLS_REPORT_HPP
#define EFFSPEC_TOOLS_REPORT_HPP

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "effspec/matrix.hpp"

namespace effspec::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kInconclusive = 2,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kSoftware = 70,
};

/// Ordered key/value records. Rendered either as "key: value" lines or, in
/// --json-lines mode, as one {"key": value} object per line.
class Report {
 public:
  explicit Report(std::string command);

  void add(const std::string& key, const std::string& text);
  void add(const std::string& key, const char* text) { add(key, std::string(text)); }
  void add(const std::string& key, double value);
  void add(const std::string& key, bool value);
  void add_count(const std::string& key, std::size_t value);
  void add(const std::string& key, const IndexSet& subset);
  void add(const std::string& key, const std::vector<double>& values);
  void add(const std::string& key, Complex value);
  /// Record with a custom human rendering.
  void add_raw(const std::string& key, std::string text, nlohmann::json json);

  /// Free-form text written verbatim in human mode (e.g. a matrix file).
  /// Ignored in JSON mode, which relies on the records.
  void set_body(std::string body) { body_ = std::move(body); }

  void set_exit_code(int code) { exit_code_ = code; }
  int exit_code() const noexcept { return exit_code_; }

  void render(std::ostream& out, bool json_lines) const;

 private:
  struct Record {
    std::string key;
    std::string text;
    nlohmann::json json;
  };
  std::vector<Record> records_;
  std::string body_;
  int exit_code_ = kAffirmative;
};

/// JSON number holding exactly the value printed in human mode.
nlohmann::json rounded(double x);

}  // namespace effspec::cli

#endif  // EFFSPEC_TOOLS_REPORT_HPP
