#include "report.hpp"

#include <cstdlib>

#include "effspec/matrix_io.hpp"

namespace effspec::cli {

nlohmann::json rounded(double x) { return std::strtod(format_fixed12(x).c_str(), nullptr); }

Report::Report(std::string command) { add("command", command); }

void Report::add(const std::string& key, const std::string& text) {
  records_.push_back({key, text, text});
}

void Report::add(const std::string& key, double value) {
  records_.push_back({key, format_fixed12(value), rounded(value)});
}

void Report::add(const std::string& key, bool value) {
  records_.push_back({key, value ? "true" : "false", value});
}

void Report::add_count(const std::string& key, std::size_t value) {
  records_.push_back({key, std::to_string(value), value});
}

void Report::add(const std::string& key, const IndexSet& subset) {
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t i : subset.members()) members.push_back(i + 1);
  records_.push_back({key, subset.to_string(), members});
}

void Report::add(const std::string& key, const std::vector<double>& values) {
  std::string text;
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ", ";
    text += format_fixed12(values[i]);
    arr.push_back(rounded(values[i]));
  }
  records_.push_back({key, text, arr});
}

void Report::add(const std::string& key, Complex value) {
  records_.push_back({key, format_fixed12(value.real()) + " " + format_fixed12(value.imag()),
                      nlohmann::json::array({rounded(value.real()), rounded(value.imag())})});
}

void Report::add_raw(const std::string& key, std::string text, nlohmann::json json) {
  records_.push_back({key, std::move(text), std::move(json)});
}

void Report::render(std::ostream& out, bool json_lines) const {
  if (json_lines) {
    for (const auto& r : records_) out << nlohmann::json{{r.key, r.json}}.dump() << '\n';
    out << nlohmann::json{{"exit_code", exit_code_}}.dump() << '\n';
    return;
  }
  if (!body_.empty()) {
    out << body_;
    return;
  }
  for (const auto& r : records_) out << r.key << ": " << r.text << '\n';
  out << "exit_code: " << exit_code_ << '\n';
}

}  // namespace effspec::cli
