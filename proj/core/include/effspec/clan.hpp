#ifndef EFFSPEC_CLAN_HPP
#define EFFSPEC_CLAN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "effspec/error.hpp"
#include "effspec/matrix.hpp"
#include "effspec/spectral.hpp"
#include "effspec/structure.hpp"

namespace effspec {

/// Default ceiling for the exhaustive clan scan.
inline constexpr std::size_t kDefaultClanCap = 16;

/// Block of rank >= 2 handed to rank1_factor. Carries the 2x2 minor with the
/// largest magnitude (0-based rows and columns of the block).
class RankError : public Error {
 public:
  RankError(std::array<std::size_t, 2> rows, std::array<std::size_t, 2> cols, double minor);

  std::array<std::size_t, 2> rows() const noexcept { return rows_; }
  std::array<std::size_t, 2> cols() const noexcept { return cols_; }
  double minor() const noexcept { return minor_; }

 private:
  std::array<std::size_t, 2> rows_;
  std::array<std::size_t, 2> cols_;
  double minor_;
};

/// B = u v^T.
struct Rank1Factors {
  std::vector<double> u;
  std::vector<double> v;
};

/// Canonical rank-one factorization: u is the column holding the largest
/// |B_ij|, divided by that entry so its largest component is exactly 1, and v
/// is the matching row of B. A zero block factors as two zero vectors.
/// Throws RankError when rank_at_most(B, 1, tol) fails.
Rank1Factors rank1_factor(const Matrix& b, double tol = 1e-9);

/// alpha with 2 <= |alpha| <= n-2 such that
///   K[alpha, alpha^c] = v b^T   and   K[alpha^c, alpha] = c w^T.
/// v and w (the alpha-side vectors) carry the canonical normalization of
/// rank1_factor; b and c carry the scale.
struct Clan {
  IndexSet alpha;
  std::vector<double> v;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> w;
};

/// Factors the two off-diagonal blocks of alpha, or nullopt if alpha is not a clan.
std::optional<Clan> make_clan(const Matrix& k, const IndexSet& alpha, double tol = 1e-9);

/// Every clan of K, in size-then-lex order of alpha. alpha and its complement
/// are tested and reported independently. Empty for n <= 3.
std::vector<Clan> find_clans(const Matrix& k, double tol = 1e-9,
                             std::size_t cap = kDefaultClanCap);

bool is_clan_free(const Matrix& k, double tol = 1e-9, std::size_t cap = kDefaultClanCap);

/// With alpha moved to the front,
///   K  = [[A, v b^T], [c w^T, B]]   becomes   [[A^T, w b^T], [c v^T, B]],
/// returned in the original index order. The clan is re-verified against K
/// and DomainError is thrown if its factors do not reproduce K's blocks.
Matrix partial_transpose(const Matrix& k, const Clan& clan, double tol = 1e-9);

/// Every principal submatrix pair K[beta], K~[beta] has the same spectrum,
/// decided on the principal-minor tables.
EqualityVerdict verify_partial_transpose_invariance(const Matrix& k, const Matrix& k2,
                                                    double tol = 1e-9,
                                                    std::size_t cap = kDefaultClanCap);

enum class ClassificationKind {
  identical,
  diagonally_similar_to_k,
  diagonally_similar_to_k_transpose,
  clan_obstructed,
  unresolved,
};

std::string to_string(ClassificationKind kind);

struct Classification {
  ClassificationKind kind = ClassificationKind::unresolved;
  /// K~ (or its atomic part, when K is symmetric) = D M D^-1 with M = K or K^T.
  std::optional<SimilarityWitness> witness;
  /// Short explanation, e.g. why the pair stayed unresolved.
  std::string note;
};

/// For nonnegative K, K~ with equal principal minors, identifies which
/// structural relation explains the equality:
///  - both symmetric: K~ must equal K;
///  - K symmetric: the atomic part of K~ is diagonally similar to K;
///  - otherwise a diagonal similarity to K, then to K^T, is searched;
///  - failing that, a clan in K means uniqueness can genuinely fail.
/// Throws DomainError for negative entries and PreconditionError if the minor
/// tables differ.
Classification classify_minor_equal_pair(const Matrix& k, const Matrix& k2, double tol = 1e-9,
                                         std::size_t cap = kDefaultClanCap);

}  // namespace effspec

#endif  // EFFSPEC_CLAN_HPP
