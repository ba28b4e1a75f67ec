#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "effspec/effspec.hpp"
#include "report.hpp"

namespace effspec::cli {

namespace {

/// Usage problem detected after flag parsing (bad list, size mismatch, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data unsuitable for the command (e.g. negative entries).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<double> parse_eta_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split_commas(text)) {
    part = trim(part);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size() || !std::isfinite(v))
      throw UsageError("--eta: malformed number '" + std::string(part) + "'");
    if (v < 0.0) throw UsageError("--eta: components must be nonnegative");
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split_commas(text)) {
    part = trim(part);
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size())
      throw UsageError("--alpha: malformed index '" + std::string(part) + "'");
    out.push_back(v);
  }
  return out;
}

EtaVector eta_for(const Matrix& k, const std::string& flag) {
  if (flag.empty()) return EtaVector::ones(k.dim());
  auto values = parse_eta_list(flag);
  if (values.size() != k.dim())
    throw UsageError("--eta has " + std::to_string(values.size()) +
                     " components but the matrix has dimension " + std::to_string(k.dim()));
  return EtaVector(std::move(values));
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    throw UsageError("matrices have dimensions " + std::to_string(a.dim()) + " and " +
                     std::to_string(b.dim()));
}

void require_nonnegative(const Matrix& k, const std::string& what) {
  if (!k.is_nonnegative()) throw DataError(what + " requires a nonnegative matrix");
}

std::string vector_text(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_fixed12(v[i]);
  }
  return s + ")";
}

nlohmann::json vector_json(const std::vector<double>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (double x : v) a.push_back(rounded(x));
  return a;
}

nlohmann::json subset_json(const IndexSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i : s.members()) a.push_back(i + 1);
  return a;
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_radius(const std::string& file, const std::string& eta_flag) {
  const Matrix k = read_matrix_file(file);
  const EtaVector eta = eta_for(k, eta_flag);
  Report r("radius");
  r.add("file", file);
  r.add_count("n", k.dim());
  r.add("eta", std::vector<double>(eta.values().begin(), eta.values().end()));
  r.add("radius", effective_radius(k, eta));
  return r;
}

Report cmd_spectrum(const std::string& file, const std::string& eta_flag) {
  const Matrix k = read_matrix_file(file);
  const EtaVector eta = eta_for(k, eta_flag);
  Report r("spectrum");
  r.add("file", file);
  r.add_count("n", k.dim());
  r.add("eta", std::vector<double>(eta.values().begin(), eta.values().end()));
  for (const Complex& z : effective_spectrum(k, eta)) r.add("eigenvalue", z);
  return r;
}

Report cmd_compare(const std::string& file_a, const std::string& file_b, double tol,
                   bool signed_mode, const Limits& limits) {
  const Matrix a = read_matrix_file(file_a);
  const Matrix b = read_matrix_file(file_b);
  require_same_dim(a, b);
  if (!signed_mode && (!a.is_nonnegative() || !b.is_nonnegative()))
    throw DataError("negative entries: rerun with --signed for the signed-matrix check");

  const EqualityVerdict v = signed_mode ? signed_equality_check(a, b, tol, limits.subset_cap)
                                        : same_effective_family(a, b, tol, limits.subset_cap);
  Report r("compare");
  r.add("file_a", file_a);
  r.add("file_b", file_b);
  r.add("tol", tol);
  r.add("method", to_string(v.method));
  r.add("verdict", to_string(v.outcome));
  if (const auto w = v.witness_subset()) {
    r.add("witness", *w);
    r.add("minor_a", principal_minor(a, *w));
    r.add("minor_b", principal_minor(b, *w));
  }
  if (!v.failed_precondition.empty()) r.add("failed_precondition", v.failed_precondition);
  r.add("max_discrepancy", v.max_discrepancy);
  switch (v.outcome) {
    case Outcome::equal:
      r.set_exit_code(kAffirmative);
      break;
    case Outcome::not_equal:
      r.set_exit_code(kNegative);
      break;
    case Outcome::inconclusive:
      r.set_exit_code(kInconclusive);
      break;
  }
  return r;
}

Report cmd_minors(const std::string& file, const Limits& limits) {
  const Matrix k = read_matrix_file(file);
  const MinorTable table = all_principal_minors(k, limits.subset_cap);
  Report r("minors");
  r.add("file", file);
  r.add_count("n", k.dim());
  for (SubsetMask s : subsets_size_lex(k.dim())) {
    const IndexSet alpha = IndexSet::from_mask(s, k.dim());
    const double value = table.at(s);
    r.add_raw("minor", alpha.to_string() + " " + format_fixed12(value),
              {{"subset", subset_json(alpha)}, {"value", rounded(value)}});
  }
  return r;
}

Report cmd_atoms(const std::string& file) {
  const Matrix k = read_matrix_file(file);
  const Partition p = atoms(k);
  Report r("atoms");
  r.add("file", file);
  r.add_count("n", k.dim());
  r.add("irreducible", p.blocks.size() == 1);
  r.add("completely_reducible", is_completely_reducible(k));
  r.add_count("atom_count", p.blocks.size());
  for (const IndexSet& block : p.blocks) r.add("atom", block);
  return r;
}

Report cmd_clans(const std::string& file, double tol, const Limits& limits) {
  const Matrix k = read_matrix_file(file);
  const auto clans = find_clans(k, tol, limits.clan_cap);
  Report r("clans");
  r.add("file", file);
  r.add_count("n", k.dim());
  r.add("clan_free", clans.empty());
  r.add_count("clan_count", clans.size());
  for (const Clan& c : clans) {
    r.add_raw("clan",
              c.alpha.to_string() + " v=" + vector_text(c.v) + " b=" + vector_text(c.b) +
                  " c=" + vector_text(c.c) + " w=" + vector_text(c.w),
              {{"alpha", subset_json(c.alpha)},
               {"v", vector_json(c.v)},
               {"b", vector_json(c.b)},
               {"c", vector_json(c.c)},
               {"w", vector_json(c.w)}});
  }
  return r;
}

Report cmd_partial_transpose(const std::string& file, const std::string& alpha_flag, double tol) {
  const Matrix k = read_matrix_file(file);
  const IndexSet alpha = IndexSet::from_one_based(parse_index_list(alpha_flag), k.dim());
  Report r("partial-transpose");
  r.add("file", file);
  r.add("alpha", alpha);
  const auto clan = make_clan(k, alpha, tol);
  if (!clan) {
    r.add("clan", false);
    r.set_exit_code(kNegative);
    return r;
  }
  const Matrix t = partial_transpose(k, *clan, tol);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (double x : t.row(i)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  r.add("clan", true);
  r.add_raw("matrix", "", rows);
  r.set_body(format_matrix(t));
  return r;
}

Report cmd_diagsim(const std::string& file_a, const std::string& file_b, double tol) {
  const Matrix a = read_matrix_file(file_a);
  const Matrix b = read_matrix_file(file_b);
  require_same_dim(a, b);
  Report r("diagsim");
  r.add("file_a", file_a);
  r.add("file_b", file_b);
  r.add("tol", tol);
  const auto w = diagonal_similarity_witness(a, b, tol);
  r.add("similar", w.has_value());
  if (w) {
    r.add("d", w->d);
    r.add("residual", w->residual);
  }
  r.set_exit_code(w ? kAffirmative : kNegative);
  return r;
}

Report cmd_minimize(const std::string& file, std::size_t budget, double tol,
                    const Limits& limits) {
  const Matrix k = read_matrix_file(file);
  const std::size_t n = k.dim();
  require_nonnegative(k, "minimize");
  check_subset_cap(n, limits.subset_cap);
  if (budget > n)
    throw UsageError("--budget " + std::to_string(budget) + " exceeds the dimension " +
                     std::to_string(n));

  // Every boolean eta with exactly `budget` zeros.
  std::vector<IndexSet> removed;
  std::vector<double> radii;
  if (budget == 0) {
    removed.emplace_back(std::vector<std::size_t>{}, n);
    radii.push_back(effective_radius(k, EtaVector::ones(n)));
  } else {
    for (SubsetMask s : subsets_of_size(n, budget)) {
      removed.push_back(IndexSet::from_mask(s, n));
      radii.push_back(effective_radius(k, EtaVector::indicator(removed.back().complement())));
    }
  }
  const double best = *std::min_element(radii.begin(), radii.end());

  Report r("minimize");
  r.add("file", file);
  r.add_count("n", n);
  r.add_count("budget", budget);
  r.add("radius", best);
  std::size_t ties = 0;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (radii[i] <= best + tol * std::max(1.0, best)) {
      if (ties == 0) r.add("optimum", removed[i]);
      r.add("tie", removed[i]);
      ++ties;
    }
  }
  r.add_count("tie_count", ties);
  return r;
}

}  // namespace

std::optional<Limits> limits_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return Limits{kDefaultSubsetCap, kDefaultClanCap};
  const std::string_view text = trim(value);
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
  n = std::min(n, kHardSubsetCeiling);
  return Limits{n, n};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* max_n_env) {
  const auto limits = limits_from_env(max_n_env);
  if (!limits) {
    err << "error: EFFSPEC_MAX_N must be a nonnegative integer\n";
    return kUsage;
  }

  CLI::App app{"Effective spectrum and effective spectral radius of square matrices", "effspec"};
  app.require_subcommand(1);
  bool json_lines = false;
  app.add_flag("--json-lines", json_lines, "Emit one JSON {key: value} record per line");

  std::string file_a;
  std::string file_b;
  std::string eta_flag;
  std::string alpha_flag;
  double tol = 1e-9;
  bool signed_mode = false;
  std::size_t budget = 0;

  const auto with_json = [&](CLI::App* sub) {
    sub->add_flag("--json-lines", json_lines, "Emit one JSON {key: value} record per line");
  };

  auto* radius = app.add_subcommand("radius", "Effective spectral radius rho(K Diag(eta))");
  radius->add_option("file", file_a, "Matrix file")->required();
  radius->add_option("--eta", eta_flag, "Comma-separated nonnegative scaling (default all ones)");
  with_json(radius);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of K Diag(eta)");
  spectrum->add_option("file", file_a, "Matrix file")->required();
  spectrum->add_option("--eta", eta_flag, "Comma-separated nonnegative scaling (default all ones)");
  with_json(spectrum);

  auto* compare = app.add_subcommand("compare", "Decide whether two matrices share R_e");
  compare->add_option("file_a", file_a, "First matrix file")->required();
  compare->add_option("file_b", file_b, "Second matrix file")->required();
  compare->add_option("--tol", tol, "Mixed tolerance for minor comparison");
  compare->add_flag("--signed", signed_mode, "Use the signed-diagonal criterion");
  with_json(compare);

  auto* minors = app.add_subcommand("minors", "All principal minors");
  minors->add_option("file", file_a, "Matrix file")->required();
  with_json(minors);

  auto* atoms_cmd = app.add_subcommand("atoms", "Maximal irreducible index sets");
  atoms_cmd->add_option("file", file_a, "Matrix file")->required();
  with_json(atoms_cmd);

  auto* clans = app.add_subcommand("clans", "All clans with their rank-one factors");
  clans->add_option("file", file_a, "Matrix file")->required();
  clans->add_option("--tol", tol, "Relative rank tolerance");
  with_json(clans);

  auto* pt = app.add_subcommand("partial-transpose", "Partial transpose over a clan");
  pt->add_option("file", file_a, "Matrix file")->required();
  pt->add_option("--alpha", alpha_flag, "Comma-separated 1-based clan indices")->required();
  pt->add_option("--tol", tol, "Relative rank tolerance");
  with_json(pt);

  auto* diagsim = app.add_subcommand("diagsim", "Find D with A = D B D^-1");
  diagsim->add_option("file_a", file_a, "First matrix file")->required();
  diagsim->add_option("file_b", file_b, "Second matrix file")->required();
  diagsim->add_option("--tol", tol, "Relative residual tolerance");
  with_json(diagsim);

  auto* minimize = app.add_subcommand("minimize", "Best set of indices to remove under a budget");
  minimize->add_option("file", file_a, "Matrix file")->required();
  minimize->add_option("--budget", budget, "Number of indices removed")->required();
  minimize->add_option("--tol", tol, "Relative tolerance for ties");
  with_json(minimize);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be finite and >= 0");
    std::optional<Report> report;
    if (radius->parsed()) report = cmd_radius(file_a, eta_flag);
    else if (spectrum->parsed()) report = cmd_spectrum(file_a, eta_flag);
    else if (compare->parsed()) report = cmd_compare(file_a, file_b, tol, signed_mode, *limits);
    else if (minors->parsed()) report = cmd_minors(file_a, *limits);
    else if (atoms_cmd->parsed()) report = cmd_atoms(file_a);
    else if (clans->parsed()) report = cmd_clans(file_a, tol, *limits);
    else if (pt->parsed()) report = cmd_partial_transpose(file_a, alpha_flag, tol);
    else if (diagsim->parsed()) report = cmd_diagsim(file_a, file_b, tol);
    else if (minimize->parsed()) report = cmd_minimize(file_a, budget, tol, *limits);
    report->render(out, json_lines);
    return report->exit_code();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise with EFFSPEC_MAX_N, at most "
        << kHardSubsetCeiling << ")\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kSoftware;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSoftware;
  }
}

}  // namespace effspec::cli
