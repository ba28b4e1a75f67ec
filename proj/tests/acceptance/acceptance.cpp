// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "effspec/effspec.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace effspec;
using testing::Rng;

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

const double kBeta = std::sqrt(2.0) - 1.0;

Result example_one() {
  Result o;
  const auto start = Clock::now();
  const Matrix k = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix kt = Matrix::from_rows({{0, -1}, {1, 0}});
  const double grid[] = {0.0, 0.5, 1.0, 2.0};
  double worst = 0.0;
  for (double a : grid) {
    for (double b : grid) {
      const EtaVector eta({a, b});
      const double expected = std::sqrt(a * b);
      worst = std::max({worst, std::abs(effective_radius(k, eta) - expected),
                        std::abs(effective_radius(kt, eta) - expected)});
    }
  }
  if (worst > 1e-12) o.fail(fmt("radius error %.3g > 1e-12", worst));
  const double m = principal_minor(k, IndexSet({0, 1}, 2));
  const double mt = principal_minor(kt, IndexSet({0, 1}, 2));
  if (m != -1.0 || mt != 1.0) o.fail("minor {1,2} is not -1 vs 1");
  const double elapsed = seconds_since(start);
  if (elapsed >= 0.1) o.fail(fmt("took %.3f s >= 0.1 s", elapsed));
  if (o.pass) o.detail = fmt("max radius error %.2g", worst) + fmt(", %.4f s", elapsed);
  return o;
}

Result example_two() {
  Result o;
  const Matrix k = Matrix::from_rows({{1, kBeta}, {kBeta, 1}});
  const Matrix kt = Matrix::from_rows({{1, -1}, {1, 1}});
  const std::vector<Complex> expected_k{std::sqrt(2.0), 2.0 - std::sqrt(2.0)};
  const std::vector<Complex> expected_kt{{1, 1}, {1, -1}};
  if (!match_spectra(eigenvalues(k), expected_k, 1e-10).equal) o.fail("spec(K) mismatch");
  if (!match_spectra(eigenvalues(kt), expected_kt, 1e-10).equal) o.fail("spec(K~) mismatch");
  const auto tables =
      compare_boolean_radius_tables(boolean_radius_table(k), boolean_radius_table(kt), 1e-12);
  if (!tables.equal()) o.fail("boolean radius tables differ");
  const EtaVector eta({1, 2});
  const double r = effective_radius(k, eta);
  const double rt = effective_radius(kt, eta);
  const double oracle = (3.0 + std::sqrt(1.0 + 8.0 * kBeta * kBeta)) / 2.0;
  if (std::abs(r - oracle) > 1e-10 || std::abs(r - 2.27015) > 1e-5)
    o.fail(fmt("R_e[K](1,2) = %.12f", r));
  if (std::abs(rt - 2.0) > 1e-12) o.fail(fmt("R_e[K~](1,2) = %.12f", rt));
  if (!(r - rt > 0.25)) o.fail(fmt("gap %.6f <= 0.25", r - rt));
  if (o.pass) o.detail = fmt("R_e at (1,2): %.6f", r) + fmt(" vs %.6f", rt);
  return o;
}

Result equivalence_suite() {
  Result o;
  const auto start = Clock::now();
  Rng rng(20261);
  double worst_spec = 0.0;
  for (int trial = 0; trial < 200 && o.pass; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix k = testing::random_nonnegative(n, rng, 0.1 * (trial % 6));
    const Matrix d_k = testing::similarity(k, testing::random_vector(n, rng, 0.1, 10.0));
    const std::pair<const char*, Matrix> pairs[] = {
        {"transpose", k.transposed()}, {"atomic part", atomic_part(k)}, {"D K D^-1", d_k}};
    for (const auto& [name, k2] : pairs) {
      const std::string where = std::string(name) + " at trial " + std::to_string(trial);
      if (!minors_equal(k, k2, 1e-9).equal()) o.fail("minors differ: " + where);
      if (!compare_boolean_radius_tables(boolean_radius_table(k), boolean_radius_table(k2), 1e-8)
               .equal())
        o.fail("boolean radii differ: " + where);
      for (int draw = 0; draw < 20; ++draw) {
        const EtaVector eta = testing::random_eta(n, rng);
        const auto m = match_spectra(effective_spectrum(k, eta), effective_spectrum(k2, eta), 1e-7);
        worst_spec = std::max(worst_spec, m.max_discrepancy);
        if (!m.equal) o.fail("effective spectra differ: " + where);
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) o.fail(fmt("took %.1f s >= 60 s", elapsed));
  if (o.pass) o.detail = fmt("max spectrum discrepancy %.2g", worst_spec) + fmt(", %.2f s", elapsed);
  return o;
}

Result converse_detection() {
  Result o;
  Rng rng(20262);
  double smallest_gap = 1e300;
  std::size_t perturbations = 0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix k = testing::random_positive(n, rng);
    const auto radii = boolean_radius_table(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix k2 = k;
        k2.set(i, j, k(i, j) + 1.0);
        ++perturbations;
        const auto v = minors_equal(k, k2, 1e-9);
        if (v.outcome != effspec::Outcome::not_equal || !v.witness_subset())
          o.fail("perturbation not detected at trial " + std::to_string(trial));
        const auto diff = compare_tables(radii, boolean_radius_table(k2), 1e-4);
        smallest_gap = std::min(smallest_gap, diff.max_discrepancy);
        if (!diff.differs) o.fail(fmt("boolean radii separated by only %.3g", diff.max_discrepancy));
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(perturbations) + " perturbations, smallest separation " +
               fmt("%.3g", smallest_gap);
  return o;
}

Result partial_transpose_suite() {
  Result o;
  Rng rng(20263);
  double worst_poly = 0.0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const std::size_t m = 2 + (trial / 3) % (n - 3);
    const auto inst = testing::planted_clan(n, m, rng, trial % 2 == 0, true);
    const auto clan = make_clan(inst.k, IndexSet(inst.alpha, n));
    if (!clan) {
      o.fail("planted clan not recognized at trial " + std::to_string(trial));
      break;
    }
    const Matrix k2 = partial_transpose(inst.k, *clan);
    if (!verify_partial_transpose_invariance(inst.k, k2, 1e-9).equal())
      o.fail("invariance check failed at trial " + std::to_string(trial));
    for (SubsetMask s : subsets_size_lex(n))
      if (std::abs(testing::leibniz_minor(inst.k, s) - testing::leibniz_minor(k2, s)) > 1e-9)
        o.fail("minor differs at trial " + std::to_string(trial));
    const Polynomial p = characteristic_polynomial(inst.k);
    const Polynomial p2 = characteristic_polynomial(k2);
    for (std::size_t c = 0; c <= n; ++c)
      worst_poly = std::max(worst_poly, std::abs(p.coefficient(c) - p2.coefficient(c)));
    if (worst_poly > 1e-9) o.fail(fmt("char poly coefficient gap %.3g", worst_poly));
  }
  if (o.pass) o.detail = fmt("max char poly coefficient gap %.2g", worst_poly);
  return o;
}

Result similarity_recovery() {
  Result o;
  Rng rng(20264);
  double worst = 0.0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Matrix k = testing::random_positive(n, rng);
    const auto d = testing::random_vector(n, rng, 0.1, 10.0);
    const auto w = diagonal_similarity_witness(testing::similarity(k, d), k);
    if (!w) {
      o.fail("no witness at trial " + std::to_string(trial));
      break;
    }
    const double d_max = *std::max_element(d.begin(), d.end());
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = d[i] / d_max;
      worst = std::max(worst, std::abs(w->d[i] - expected) / expected);
    }
  }
  if (worst > 1e-8) o.fail(fmt("relative error %.3g > 1e-8", worst));
  if (o.pass) o.detail = fmt("max relative error %.2g", worst);
  return o;
}

Result clan_oracle() {
  Result o;
  Rng rng(20265);
  std::size_t with_clans = 0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const std::size_t n = 4 + trial % 5;
    Matrix k(n);
    switch (trial % 4) {
      case 0: k = testing::planted_clan(n, 2 + trial % (n - 3), rng, false, true).k; break;
      case 1: k = testing::planted_clan(n, 2 + trial % (n - 3), rng, true, true).k; break;
      case 2: k = testing::random_nonnegative(n, rng, 0.7); break;
      default: k = testing::random_signed(n, rng); break;
    }
    std::vector<std::uint32_t> found;
    for (const Clan& c : find_clans(k)) found.push_back(static_cast<std::uint32_t>(c.alpha.mask()));
    if (found != testing::clans_by_minors(k, 1e-9))
      o.fail("clan sets differ at trial " + std::to_string(trial));
    if (!found.empty()) ++with_clans;
  }
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const Matrix k = trial % 2 ? testing::random_signed(3, rng) : testing::random_nonnegative(3, rng, 0.5);
    if (!is_clan_free(k)) o.fail("3x3 input reported a clan");
  }
  if (o.pass) o.detail = std::to_string(with_clans) + "/100 inputs with clans; 100 3x3 inputs clan-free";
  return o;
}

Result perron_property() {
  Result o;
  Rng rng(20266);
  double worst = 0.0;
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Matrix k = testing::random_nonnegative(n, rng, 0.1 * (trial % 8));
    const auto spec = eigenvalues(k);
    double rho = 0.0;
    for (const Complex& z : spec) rho = std::max(rho, std::abs(z));
    double closest = 1e300;
    for (const Complex& z : spec) closest = std::min(closest, std::abs(z - rho));
    const double scaled = closest / std::max(1.0, rho);
    worst = std::max(worst, scaled);
    if (scaled > 1e-8) o.fail("no eigenvalue at rho for trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = fmt("max scaled distance %.2g", worst);
  return o;
}

Result performance_floor() {
  Result o;
  Rng rng(20267);
  const Matrix k = testing::random_nonnegative(12, rng, 0.2);
  auto start = Clock::now();
  const auto table = boolean_radius_table(k);
  const double table_time = seconds_since(start);
  if (table.entry_count() != 4095U) o.fail("table incomplete");
  if (table_time >= 5.0) o.fail(fmt("boolean radius table took %.2f s", table_time));

  const auto dir = std::filesystem::path(EFFSPEC_TEST_SCRATCH_DIR);
  std::filesystem::create_directories(dir);
  const auto file = (dir / "perf12.txt").string();
  std::ofstream(file) << format_matrix(k);
  std::ostringstream out;
  std::ostringstream err;
  start = Clock::now();
  const int code = cli::run({"minimize", file, "--budget", "6"}, out, err);
  const double minimize_time = seconds_since(start);
  if (code != 0) o.fail("minimize exited " + std::to_string(code) + ": " + err.str());
  if (minimize_time >= 10.0) o.fail(fmt("minimize took %.2f s", minimize_time));
  if (o.pass)
    o.detail = fmt("boolean table %.3f s", table_time) + fmt(", minimize n=12 k=6 %.3f s", minimize_time);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"1 swap/rotation pair shares R_e, minors differ", example_one},
      {"2 symmetric/skew pair spectra, tables, radii", example_two},
      {"3 equivalence suite on transpose, atomic part, diagonal similarity", equivalence_suite},
      {"4 single-entry perturbation detected", converse_detection},
      {"5 partial transpose invariance", partial_transpose_suite},
      {"6 diagonal similarity recovery", similarity_recovery},
      {"7 clan search matches minor oracle", clan_oracle},
      {"8 Perron eigenvalue present", perron_property},
      {"9 performance floor", performance_floor},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Result o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s  criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
