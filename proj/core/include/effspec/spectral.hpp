#ifndef EFFSPEC_SPECTRAL_HPP
#define EFFSPEC_SPECTRAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "effspec/matrix.hpp"
#include "effspec/minor_table.hpp"

namespace effspec {

/// Nonnegative scaling vector (vaccination profile). Components are finite
/// and >= 0; the all-zero vector is allowed.
class EtaVector {
 public:
  explicit EtaVector(std::vector<double> values);

  static EtaVector ones(std::size_t n);
  /// 1 on alpha, 0 elsewhere.
  static EtaVector indicator(const IndexSet& alpha);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  /// Every component is 0 or 1.
  bool is_boolean() const noexcept;
  /// 1 where the component is positive, 0 elsewhere.
  EtaVector support() const;
  std::string to_string() const;

  friend bool operator==(const EtaVector&, const EtaVector&) = default;

 private:
  std::vector<double> values_;
};

/// K * Diag(eta)
Matrix apply_eta(const Matrix& k, const EtaVector& eta);

/// rho(K * Diag(eta)). Zero for the all-zero eta.
double effective_radius(const Matrix& k, const EtaVector& eta);
/// Eigenvalue multiset of K * Diag(eta).
std::vector<Complex> effective_spectrum(const Matrix& k, const EtaVector& eta);

/// rho(K[alpha]) for every non-empty alpha, which is the effective radius at
/// the indicator of alpha. The empty support has radius 0 and is not stored.
class BooleanRadiusTable : public SubsetTable {
 public:
  using SubsetTable::SubsetTable;
};

BooleanRadiusTable boolean_radius_table(const Matrix& k, std::size_t cap = kDefaultSubsetCap);

/// Result of greedy minimum-distance matching between two eigenvalue multisets.
struct SpectrumMatch {
  bool equal = false;
  double max_discrepancy = 0.0;
};

/// Multisets agree when every matched pair is within tol * max(1, scale),
/// scale being the largest modulus in either set.
SpectrumMatch match_spectra(std::span<const Complex> a, std::span<const Complex> b, double tol);

enum class Outcome { equal, not_equal, inconclusive };

/// Which equivalent condition a verdict was decided on.
enum class VerdictMethod {
  principal_minors,
  boolean_radii,
  effective_spectra,
  signed_principal_minors,
};

std::string to_string(Outcome o);
std::string to_string(VerdictMethod m);

struct EqualityVerdict {
  Outcome outcome = Outcome::inconclusive;
  /// Where disagreement was found; always set when outcome is not_equal.
  std::variant<std::monostate, IndexSet, EtaVector> witness;
  VerdictMethod method = VerdictMethod::principal_minors;
  double max_discrepancy = 0.0;
  /// Why an inconclusive verdict could not decide.
  std::string failed_precondition;

  bool equal() const noexcept { return outcome == Outcome::equal; }
  std::optional<IndexSet> witness_subset() const;
};

EqualityVerdict compare_minor_tables(const MinorTable& a, const MinorTable& b, double tol);
EqualityVerdict compare_boolean_radius_tables(const BooleanRadiusTable& a,
                                              const BooleanRadiusTable& b, double tol);

/// Every principal minor agrees within |a-b| <= tol*max(1,|a|,|b|). The
/// witness is the first failing subset in size-then-lex order.
EqualityVerdict minors_equal(const Matrix& k, const Matrix& k2, double tol = 1e-9,
                             std::size_t cap = kDefaultSubsetCap);

/// For entrywise nonnegative K and K~, principal-minor equality is equivalent
/// to equality of the effective spectral radius on R_+^n, on {0,1}^n, and of
/// the effective spectrum on either domain. The verdict is decided on the
/// minor tables and holds for all five conditions.
///
/// Throws DomainError for negative entries; signed_equality_check covers
/// that case.
EqualityVerdict same_effective_family(const Matrix& k, const Matrix& k2, double tol = 1e-9,
                                      std::size_t cap = kDefaultSubsetCap);

/// Signed matrices. When the diagonals share signs entrywise and each has at
/// most one zero, equal effective radii force equal principal minors, so the
/// minor comparison decides. Otherwise the verdict is inconclusive and names
/// the failed condition; it never reports inequality in that case.
EqualityVerdict signed_equality_check(const Matrix& k, const Matrix& k2, double tol = 1e-9,
                                      std::size_t cap = kDefaultSubsetCap);

/// Checks that K Diag(eta), Diag(eta) K, Diag(1_{eta>0}) K Diag(eta) and
/// Diag(eta) K Diag(1_{eta>0}) have the same effective spectrum at eta2.
bool scaling_identities_check(const Matrix& k, const EtaVector& eta, const EtaVector& eta2,
                              double tol = 1e-8);

}  // namespace effspec

#endif  // EFFSPEC_SPECTRAL_HPP
