#include "effspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

#include "effspec/error.hpp"

namespace effspec {

// ---------------------------------------------------------------------------
// EtaVector

EtaVector::EtaVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("eta vector must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0)
      throw DomainError("eta component " + std::to_string(i + 1) +
                        " must be a finite nonnegative number");
  }
}

EtaVector EtaVector::ones(std::size_t n) { return EtaVector(std::vector<double>(n, 1.0)); }

EtaVector EtaVector::indicator(const IndexSet& alpha) {
  std::vector<double> v(alpha.ambient(), 0.0);
  for (std::size_t i : alpha.members()) v[i] = 1.0;
  return EtaVector(std::move(v));
}

bool EtaVector::is_boolean() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

EtaVector EtaVector::support() const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] > 0.0 ? 1.0 : 0.0;
  return EtaVector(std::move(v));
}

std::string EtaVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", values_[i]);
    s += buf;
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Effective spectrum

namespace {

void require_eta_dim(const Matrix& k, const EtaVector& eta) {
  if (eta.size() != k.dim())
    throw DimensionError("eta has length " + std::to_string(eta.size()) +
                         " but the matrix has dimension " + std::to_string(k.dim()));
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim())
    throw DimensionError("matrices have dimensions " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
}

}  // namespace

Matrix apply_eta(const Matrix& k, const EtaVector& eta) {
  require_eta_dim(k, eta);
  return scale_columns(k, eta.values());
}

double effective_radius(const Matrix& k, const EtaVector& eta) {
  return spectral_radius(apply_eta(k, eta));
}

std::vector<Complex> effective_spectrum(const Matrix& k, const EtaVector& eta) {
  return eigenvalues(apply_eta(k, eta));
}

BooleanRadiusTable boolean_radius_table(const Matrix& k, std::size_t cap) {
  const std::size_t n = k.dim();
  check_subset_cap(n, cap);
  BooleanRadiusTable table(n);
  const SubsetMask end = SubsetMask{1} << n;
  for (SubsetMask s = 1; s < end; ++s) {
    const IndexSet alpha = IndexSet::from_mask(s, n);
    table.set(s, spectral_radius(principal_submatrix(k, alpha)));
  }
  return table;
}

SpectrumMatch match_spectra(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  SpectrumMatch result;
  if (a.size() != b.size()) {
    result.max_discrepancy = std::numeric_limits<double>::infinity();
    return result;
  }
  double scale = 1.0;
  for (const Complex& z : a) scale = std::max(scale, std::abs(z));
  for (const Complex& z : b) scale = std::max(scale, std::abs(z));

  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
  std::sort(pairs.begin(), pairs.end());

  std::vector<bool> used_a(a.size(), false);
  std::vector<bool> used_b(b.size(), false);
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    result.max_discrepancy = std::max(result.max_discrepancy, d);
  }
  result.equal = result.max_discrepancy <= tol * scale;
  return result;
}

// ---------------------------------------------------------------------------
// Verdicts

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::equal:
      return "equal";
    case Outcome::not_equal:
      return "not-equal";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::principal_minors:
      return "principal-minors";
    case VerdictMethod::boolean_radii:
      return "boolean-radii";
    case VerdictMethod::effective_spectra:
      return "effective-spectra";
    case VerdictMethod::signed_principal_minors:
      return "signed-principal-minors";
  }
  return "?";
}

std::optional<IndexSet> EqualityVerdict::witness_subset() const {
  if (const auto* s = std::get_if<IndexSet>(&witness)) return *s;
  return std::nullopt;
}

namespace {

EqualityVerdict verdict_from_difference(const TableDifference& diff, std::size_t n,
                                        VerdictMethod method) {
  EqualityVerdict v;
  v.method = method;
  v.max_discrepancy = diff.max_discrepancy;
  if (diff.differs) {
    v.outcome = Outcome::not_equal;
    v.witness = IndexSet::from_mask(diff.first, n);
  } else {
    v.outcome = Outcome::equal;
  }
  return v;
}

}  // namespace

EqualityVerdict compare_minor_tables(const MinorTable& a, const MinorTable& b, double tol) {
  return verdict_from_difference(compare_tables(a, b, tol), a.dim(),
                                 VerdictMethod::principal_minors);
}

EqualityVerdict compare_boolean_radius_tables(const BooleanRadiusTable& a,
                                              const BooleanRadiusTable& b, double tol) {
  return verdict_from_difference(compare_tables(a, b, tol), a.dim(), VerdictMethod::boolean_radii);
}

EqualityVerdict minors_equal(const Matrix& k, const Matrix& k2, double tol, std::size_t cap) {
  require_same_dim(k, k2);
  return compare_minor_tables(all_principal_minors(k, cap), all_principal_minors(k2, cap), tol);
}

EqualityVerdict same_effective_family(const Matrix& k, const Matrix& k2, double tol,
                                      std::size_t cap) {
  require_same_dim(k, k2);
  if (!k.is_nonnegative() || !k2.is_nonnegative())
    throw DomainError(
        "same_effective_family requires entrywise nonnegative matrices; "
        "use signed_equality_check for signed input");
  return minors_equal(k, k2, tol, cap);
}

EqualityVerdict signed_equality_check(const Matrix& k, const Matrix& k2, double tol,
                                      std::size_t cap) {
  require_same_dim(k, k2);
  const std::size_t n = k.dim();

  std::string failed;
  std::size_t zeros_k = 0;
  std::size_t zeros_k2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto sgn = [](double x) { return (x > 0.0) - (x < 0.0); };
    if (sgn(k(i, i)) != sgn(k2(i, i)) && failed.empty())
      failed = "diagonal signs differ at index " + std::to_string(i + 1);
    zeros_k += k(i, i) == 0.0;
    zeros_k2 += k2(i, i) == 0.0;
  }
  if (failed.empty() && (zeros_k > 1 || zeros_k2 > 1))
    failed = "more than one zero on the diagonal (" + std::to_string(std::max(zeros_k, zeros_k2)) +
             ")";

  EqualityVerdict v = minors_equal(k, k2, tol, cap);
  v.method = VerdictMethod::signed_principal_minors;
  // Equal minors give equal effective spectra for any signs; only a negative
  // answer needs the diagonal condition.
  if (v.outcome == Outcome::not_equal && !failed.empty()) {
    v.outcome = Outcome::inconclusive;
    v.witness = std::monostate{};
    v.failed_precondition = failed;
  }
  return v;
}

bool scaling_identities_check(const Matrix& k, const EtaVector& eta, const EtaVector& eta2,
                              double tol) {
  require_eta_dim(k, eta);
  require_eta_dim(k, eta2);
  const EtaVector ind = eta.support();
  const Matrix forms[] = {
      scale_columns(k, eta.values()),
      scale_rows(k, eta.values()),
      scale_columns(scale_rows(k, ind.values()), eta.values()),
      scale_columns(scale_rows(k, eta.values()), ind.values()),
  };
  const auto reference = effective_spectrum(forms[0], eta2);
  for (std::size_t f = 1; f < std::size(forms); ++f) {
    if (!match_spectra(reference, effective_spectrum(forms[f], eta2), tol).equal) return false;
  }
  return true;
}

}  // namespace effspec
