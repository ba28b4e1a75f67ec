#include "effspec/minor_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "effspec/error.hpp"

namespace effspec {

namespace detail {
double lu_determinant(std::vector<double>& a, std::size_t n);
}

void check_subset_cap(std::size_t n, std::size_t cap) {
  const std::size_t limit = std::min(cap, kHardSubsetCeiling);
  if (n > limit) throw CapExceeded(n, limit);
}

std::vector<SubsetMask> subsets_of_size(std::size_t n, std::size_t k) {
  if (n > kHardSubsetCeiling) throw CapExceeded(n, kHardSubsetCeiling);
  std::vector<SubsetMask> out;
  if (k == 0 || k > n) return out;
  // Lexicographic combinations of {0..n-1}.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    SubsetMask m = 0;
    for (std::size_t i : idx) m |= SubsetMask{1} << i;
    out.push_back(m);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<SubsetMask> subsets_size_lex(std::size_t n) {
  if (n > kHardSubsetCeiling) throw CapExceeded(n, kHardSubsetCeiling);
  std::vector<SubsetMask> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    auto level = subsets_of_size(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::size_t> mask_members(SubsetMask mask) {
  std::vector<std::size_t> m;
  m.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    m.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return m;
}

SubsetTable::SubsetTable(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("subset table needs a positive dimension");
  if (n > kHardSubsetCeiling) throw CapExceeded(n, kHardSubsetCeiling);
  values_.assign(std::size_t{1} << n, 0.0);
}

double SubsetTable::at(SubsetMask mask) const {
  if (mask == 0 || mask >= values_.size()) throw DimensionError("subset out of range");
  return values_[mask];
}

double SubsetTable::at(const IndexSet& alpha) const {
  if (alpha.ambient() != n_) throw DimensionError("subset has wrong ambient dimension");
  return at(static_cast<SubsetMask>(alpha.mask()));
}

void SubsetTable::set(SubsetMask mask, double value) {
  if (mask == 0 || mask >= values_.size()) throw DimensionError("subset out of range");
  values_[mask] = value;
}

MinorTable all_principal_minors(const Matrix& m, std::size_t cap) {
  const std::size_t n = m.dim();
  check_subset_cap(n, cap);
  MinorTable table(n);
  std::vector<double> buf;
  buf.reserve(n * n);
  std::vector<std::size_t> members;
  const SubsetMask end = SubsetMask{1} << n;
  for (SubsetMask s = 1; s < end; ++s) {
    members = mask_members(s);
    const std::size_t k = members.size();
    buf.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) buf[a * k + b] = m(members[a], members[b]);
    table.set(s, detail::lu_determinant(buf, k));
  }
  return table;
}

TableDifference compare_tables(const SubsetTable& a, const SubsetTable& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("tables have different dimensions");
  TableDifference diff;
  for (SubsetMask s : subsets_size_lex(a.dim())) {
    const double x = a.at(s);
    const double y = b.at(s);
    diff.max_discrepancy = std::max(diff.max_discrepancy, std::abs(x - y));
    if (!diff.differs && !close_mixed(x, y, tol)) {
      diff.differs = true;
      diff.first = s;
    }
  }
  return diff;
}

}  // namespace effspec
