#include <gtest/gtest.h>

#include "effspec/error.hpp"
#include "effspec/minor_table.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace effspec {
namespace {

TEST(SubsetOrderTest, SizeThenLex) {
  const auto order = subsets_size_lex(3);
  std::vector<std::string> names;
  for (SubsetMask s : order) names.push_back(IndexSet::from_mask(s, 3).to_string());
  const std::vector<std::string> expected = {"{1}",   "{2}",   "{3}",    "{1,2}",
                                             "{1,3}", "{2,3}", "{1,2,3}"};
  EXPECT_EQ(names, expected);
  EXPECT_EQ(subsets_size_lex(10).size(), 1023U);
  EXPECT_EQ(subsets_of_size(6, 3).size(), 20U);
  EXPECT_TRUE(subsets_of_size(4, 0).empty());
  EXPECT_TRUE(subsets_of_size(4, 5).empty());
}

TEST(AllPrincipalMinorsTest, Examples) {
  const MinorTable id = all_principal_minors(Matrix::identity(2));
  EXPECT_EQ(id.entry_count(), 3U);
  EXPECT_EQ(id.at(0b01), 1.0);
  EXPECT_EQ(id.at(0b10), 1.0);
  EXPECT_EQ(id.at(0b11), 1.0);

  const MinorTable swap = all_principal_minors(Matrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(swap.at(0b01), 0.0);
  EXPECT_EQ(swap.at(0b10), 0.0);
  EXPECT_EQ(swap.at(0b11), -1.0);

  const MinorTable rot = all_principal_minors(Matrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_EQ(rot.at(0b01), 0.0);
  EXPECT_EQ(rot.at(0b10), 0.0);
  EXPECT_EQ(rot.at(0b11), 1.0);

  const MinorTable one = all_principal_minors(Matrix::from_rows({{-2.5}}));
  EXPECT_EQ(one.entry_count(), 1U);
  EXPECT_EQ(one.at(0b1), -2.5);
}

TEST(AllPrincipalMinorsTest, RefusesAboveCap) {
  try {
    all_principal_minors(Matrix::identity(6), 5);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 5U);
    EXPECT_EQ(e.dimension(), 6U);
  }
  EXPECT_THROW(all_principal_minors(Matrix::identity(25), 100), CapExceeded);
}

TEST(AllPrincipalMinorsTest, MatchesLeibnizAndDiagonal) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix m = testing::random_signed(n, rng);
    const MinorTable t = all_principal_minors(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(t.at(SubsetMask{1} << i), m(i, i));
    for (SubsetMask s : subsets_size_lex(n)) {
      const double expected = testing::leibniz_minor(m, s);
      EXPECT_NEAR(t.at(s), expected, 1e-12 * std::max(1.0, std::abs(expected)) * n);
    }
  }
}

TEST(CompareTablesTest, FirstDifferenceInSizeLexOrder) {
  MinorTable a(3);
  MinorTable b(3);
  for (SubsetMask s = 1; s < 8; ++s) {
    a.set(s, 1.0);
    b.set(s, 1.0);
  }
  EXPECT_FALSE(compare_tables(a, b, 1e-9).differs);
  b.set(0b111, 5.0);
  b.set(0b110, 3.0);  // {2,3}
  b.set(0b101, 1.0 + 1e-12);
  const auto d = compare_tables(a, b, 1e-9);
  EXPECT_TRUE(d.differs);
  EXPECT_EQ(d.first, 0b110U);
  EXPECT_DOUBLE_EQ(d.max_discrepancy, 4.0);
}

}  // namespace
}  // namespace effspec
