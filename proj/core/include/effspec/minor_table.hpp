#ifndef EFFSPEC_MINOR_TABLE_HPP
#define EFFSPEC_MINOR_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "effspec/matrix.hpp"

namespace effspec {

/// Subset bitmask; bit i set means index i belongs to the subset.
using SubsetMask = std::uint32_t;

/// Default ceiling for exhaustive enumeration over all 2^n - 1 subsets.
inline constexpr std::size_t kDefaultSubsetCap = 20;
/// Nothing enumerates past this, whatever the caller asks for.
inline constexpr std::size_t kHardSubsetCeiling = 24;

/// Throws CapExceeded when n > min(cap, kHardSubsetCeiling).
void check_subset_cap(std::size_t n, std::size_t cap);

/// Non-empty subsets of {0..n-1} ordered by size, then lexicographically by
/// their sorted members. Requires n <= kHardSubsetCeiling.
std::vector<SubsetMask> subsets_size_lex(std::size_t n);
/// Subsets of exactly k elements in lexicographic order.
std::vector<SubsetMask> subsets_of_size(std::size_t n, std::size_t k);

/// Sorted member list of a mask.
std::vector<std::size_t> mask_members(SubsetMask mask);

/// Table of values keyed by non-empty subsets of {0..n-1}.
/// Shared layout of the principal-minor table and the boolean radius table.
class SubsetTable {
 public:
  explicit SubsetTable(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  /// 2^n - 1
  std::size_t entry_count() const noexcept { return values_.size() - 1; }

  double at(SubsetMask mask) const;
  double at(const IndexSet& alpha) const;
  void set(SubsetMask mask, double value);

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// det K[alpha] for every non-empty alpha.
class MinorTable : public SubsetTable {
 public:
  using SubsetTable::SubsetTable;
};

/// Refuses with CapExceeded above `cap`.
MinorTable all_principal_minors(const Matrix& m, std::size_t cap = kDefaultSubsetCap);

/// First subset in size-then-lex order whose entries differ beyond the mixed
/// tolerance |a-b| <= tol*max(1,|a|,|b|), and the largest absolute difference.
struct TableDifference {
  bool differs = false;
  SubsetMask first = 0;
  double max_discrepancy = 0.0;
};
TableDifference compare_tables(const SubsetTable& a, const SubsetTable& b, double tol);

}  // namespace effspec

#endif  // EFFSPEC_MINOR_TABLE_HPP
