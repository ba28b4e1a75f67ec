#include "effspec/clan.hpp"

#include <algorithm>
#include <cmath>

#include "effspec/minor_table.hpp"

namespace effspec {

RankError::RankError(std::array<std::size_t, 2> rows, std::array<std::size_t, 2> cols,
                     double minor)
    : Error("block has rank above 1: minor on rows {" + std::to_string(rows[0] + 1) + "," +
            std::to_string(rows[1] + 1) + "} x cols {" + std::to_string(cols[0] + 1) + "," +
            std::to_string(cols[1] + 1) + "} is " + std::to_string(minor)),
      rows_(rows),
      cols_(cols),
      minor_(minor) {}

Rank1Factors rank1_factor(const Matrix& b, double tol) {
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  Rank1Factors f{std::vector<double>(rows, 0.0), std::vector<double>(cols, 0.0)};
  if (b.max_abs() == 0.0) return f;

  if (!rank_at_most(b, 1, tol)) {
    double best = -1.0;
    std::array<std::size_t, 2> r{};
    std::array<std::size_t, 2> c{};
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = i + 1; k < rows; ++k)
        for (std::size_t j = 0; j < cols; ++j)
          for (std::size_t l = j + 1; l < cols; ++l) {
            const double m = b(i, j) * b(k, l) - b(i, l) * b(k, j);
            if (std::abs(m) > best) {
              best = std::abs(m);
              r = {i, k};
              c = {j, l};
            }
          }
    throw RankError(r, c, b(r[0], c[0]) * b(r[1], c[1]) - b(r[0], c[1]) * b(r[1], c[0]));
  }

  // Column holding the largest entry, then the first row reaching it.
  std::size_t q = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        q = j;
      }
  std::size_t p = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (std::abs(b(i, q)) == best) {
      p = i;
      break;
    }

  const double pivot = b(p, q);
  for (std::size_t i = 0; i < rows; ++i) f.u[i] = i == p ? 1.0 : b(i, q) / pivot;
  for (std::size_t j = 0; j < cols; ++j) f.v[j] = b(p, j);
  return f;
}

std::optional<Clan> make_clan(const Matrix& k, const IndexSet& alpha, double tol) {
  const std::size_t n = k.dim();
  if (alpha.ambient() != n) throw DimensionError("clan subset has wrong ambient dimension");
  if (alpha.size() < 2 || alpha.size() + 2 > n) return std::nullopt;

  const IndexSet rest = alpha.complement();
  const Matrix upper = submatrix(k, alpha, rest);
  const Matrix lower = submatrix(k, rest, alpha);
  if (!rank_at_most(upper, 1, tol) || !rank_at_most(lower, 1, tol)) return std::nullopt;

  Rank1Factors vb = rank1_factor(upper, tol);
  Rank1Factors wc = rank1_factor(lower.transposed(), tol);
  return Clan{alpha, std::move(vb.u), std::move(vb.v), std::move(wc.v), std::move(wc.u)};
}

std::vector<Clan> find_clans(const Matrix& k, double tol, std::size_t cap) {
  const std::size_t n = k.dim();
  check_subset_cap(n, cap);
  std::vector<Clan> clans;
  if (n <= 3) return clans;
  for (std::size_t size = 2; size + 2 <= n; ++size) {
    for (SubsetMask s : subsets_of_size(n, size)) {
      if (auto c = make_clan(k, IndexSet::from_mask(s, n), tol)) clans.push_back(std::move(*c));
    }
  }
  return clans;
}

bool is_clan_free(const Matrix& k, double tol, std::size_t cap) {
  const std::size_t n = k.dim();
  check_subset_cap(n, cap);
  if (n <= 3) return true;
  for (std::size_t size = 2; size + 2 <= n; ++size) {
    for (SubsetMask s : subsets_of_size(n, size)) {
      const IndexSet alpha = IndexSet::from_mask(s, n);
      const IndexSet rest = alpha.complement();
      if (rank_at_most(submatrix(k, alpha, rest), 1, tol) &&
          rank_at_most(submatrix(k, rest, alpha), 1, tol))
        return false;
    }
  }
  return true;
}

Matrix partial_transpose(const Matrix& k, const Clan& clan, double tol) {
  const std::size_t n = k.dim();
  const IndexSet& alpha = clan.alpha;
  if (alpha.ambient() != n) throw DimensionError("clan subset has wrong ambient dimension");
  if (alpha.size() < 2 || alpha.size() + 2 > n)
    throw DomainError("clan subset " + alpha.to_string() + " must have between 2 and n-2 members");
  const IndexSet rest = alpha.complement();
  const std::size_t m = alpha.size();
  const std::size_t r = rest.size();
  if (clan.v.size() != m || clan.w.size() != m || clan.b.size() != r || clan.c.size() != r)
    throw DimensionError("clan factor lengths do not match the subset sizes");

  const auto in = alpha.members();
  const auto out = rest.members();
  const double slack = (tol + 1e-12) * std::max(1.0, k.max_abs());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (std::abs(k(in[i], out[j]) - clan.v[i] * clan.b[j]) > slack ||
          std::abs(k(out[j], in[i]) - clan.c[j] * clan.w[i]) > slack)
        throw DomainError("clan factors do not reproduce the off-diagonal blocks of " +
                          alpha.to_string());
    }
  }

  Matrix t = k;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.set(in[i], in[j], k(in[j], in[i]));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      t.set(in[i], out[j], clan.w[i] * clan.b[j]);
      t.set(out[j], in[i], clan.c[j] * clan.v[i]);
    }
  }
  return t;
}

EqualityVerdict verify_partial_transpose_invariance(const Matrix& k, const Matrix& k2, double tol,
                                                    std::size_t cap) {
  check_subset_cap(k.dim(), cap);
  return minors_equal(k, k2, tol, cap);
}

std::string to_string(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::identical:
      return "identical";
    case ClassificationKind::diagonally_similar_to_k:
      return "diagonally-similar-to-K";
    case ClassificationKind::diagonally_similar_to_k_transpose:
      return "diagonally-similar-to-K-transpose";
    case ClassificationKind::clan_obstructed:
      return "clan-obstructed";
    case ClassificationKind::unresolved:
      return "unresolved";
  }
  return "?";
}

Classification classify_minor_equal_pair(const Matrix& k, const Matrix& k2, double tol,
                                         std::size_t cap) {
  if (k.dim() != k2.dim()) throw DimensionError("classification: dimensions differ");
  if (!k.is_nonnegative() || !k2.is_nonnegative())
    throw DomainError("classification requires entrywise nonnegative matrices");
  check_subset_cap(k.dim(), cap);
  const EqualityVerdict minors = minors_equal(k, k2, tol, cap);
  if (!minors.equal())
    throw PreconditionError("principal minors differ at " + minors.witness_subset()->to_string());

  const double scale = std::max({1.0, k.max_abs(), k2.max_abs()});
  Classification result;
  if (max_abs_difference(k, k2) <= tol * scale) {
    result.kind = ClassificationKind::identical;
    return result;
  }

  const bool k_symmetric = k.is_symmetric(tol * scale);
  if (k_symmetric && k2.is_symmetric(tol * scale)) {
    result.note = "distinct symmetric matrices with equal principal minors";
    return result;
  }
  if (k_symmetric) {
    if (auto w = diagonal_similarity_witness(atomic_part(k2), k, tol)) {
      result.kind = ClassificationKind::diagonally_similar_to_k;
      result.witness = std::move(w);
    } else {
      result.note = "atomic part of K~ is not diagonally similar to symmetric K";
    }
    return result;
  }

  if (auto w = diagonal_similarity_witness(k2, k, tol)) {
    result.kind = ClassificationKind::diagonally_similar_to_k;
    result.witness = std::move(w);
    return result;
  }
  if (auto w = diagonal_similarity_witness(k2, k.transposed(), tol)) {
    result.kind = ClassificationKind::diagonally_similar_to_k_transpose;
    result.witness = std::move(w);
    return result;
  }
  if (!is_clan_free(k, tol, cap)) {
    result.kind = ClassificationKind::clan_obstructed;
    result.note = "K has a clan; partial transposes need not be diagonal similarities";
    return result;
  }
  result.note = is_irreducible(k) ? "irreducible clan-free K without a similarity witness"
                                  : "K is reducible";
  return result;
}

}  // namespace effspec
