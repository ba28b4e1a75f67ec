#include "effspec/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "effspec/error.hpp"

namespace effspec {

namespace {

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_real(std::string_view tok, std::size_t line_no) {
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value,
                                         std::chars_format::general);
  if (body.empty() || ec != std::errc{} || end != body.data() + body.size())
    throw ParseError(line_no, "malformed number '" + std::string(tok) + "'");
  if (!std::isfinite(value)) throw ParseError(line_no, "non-finite number '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto toks = tokens(strip_comment(raw));
    if (toks.empty()) continue;

    if (n == 0) {
      if (toks.size() != 1) throw ParseError(line_no, "expected the dimension n alone on a line");
      std::size_t value = 0;
      const auto tok = toks.front();
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || end != tok.data() + tok.size())
        throw ParseError(line_no, "malformed dimension '" + std::string(tok) + "'");
      if (value < 1 || value > kMaxFileDimension)
        throw ParseError(line_no, "dimension " + std::string(tok) + " outside [1, " +
                                      std::to_string(kMaxFileDimension) + "]");
      n = value;
      continue;
    }
    if (rows.size() == n) throw ParseError(line_no, "unexpected data after " + std::to_string(n) + " rows");
    if (toks.size() != n)
      throw ParseError(line_no, "row " + std::to_string(rows.size() + 1) + " has " +
                                    std::to_string(toks.size()) + " entries, expected " +
                                    std::to_string(n));
    std::vector<double> row;
    row.reserve(n);
    for (const auto tok : toks) row.push_back(parse_real(tok, line_no));
    rows.push_back(std::move(row));
  }
  if (n == 0) throw ParseError(line_no, "missing dimension line");
  if (rows.size() != n)
    throw ParseError(line_no, "expected " + std::to_string(n) + " rows, found " +
                                  std::to_string(rows.size()));
  return Matrix::from_rows(rows);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open matrix file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_exact(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_exact(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace effspec
