#include <gtest/gtest.h>

#include "td/identities.hpp"
#include "td/io.hpp"

using namespace td;

namespace {

TEST(Random, SeedDeterminesDraws) {
  Rng a = derive_rng(7, "x", 3, 0), b = derive_rng(7, "x", 3, 0), c = derive_rng(7, "x", 3, 1);
  const Matrix ma = random_matrix(3, a), mb = random_matrix(3, b), mc = random_matrix(3, c);
  EXPECT_EQ(ma, mb);
  EXPECT_NE(ma, mc);
}

TEST(Random, EntriesInRange) {
  Rng r = derive_rng(1, "range", 3, 0);
  bool low = false, high = false;
  for (int i = 0; i < 200; ++i) {
    const Matrix m = random_matrix(3, r, 9);
    for (Eigen::Index j = 0; j < m.size(); ++j) {
      EXPECT_GE(m(j), Rational(-9));
      EXPECT_LE(m(j), Rational(9));
      low = low || m(j) == Rational(-9);
      high = high || m(j) == Rational(9);
    }
  }
  EXPECT_TRUE(low && high);
  EXPECT_THROW(random_matrix(2, r, 0), std::invalid_argument);
}

TEST(Random, InvertibleMode) {
  Rng r = derive_rng(2, "inv", 2, 0);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(det_oracle(random_matrix(2, r, 1, true)).is_zero());
}

TEST(Registry, IdsAreUnique) {
  const auto& reg = identity_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = i + 1; j < reg.size(); ++j) EXPECT_NE(reg[i].id, reg[j].id);
  EXPECT_THROW(find_identity("nonsense"), std::invalid_argument);
  EXPECT_THROW(run_check("binet_cauchy", 4, 1, 1), std::invalid_argument);
}

class EveryCheck : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryCheck, PassesUpToFour) {
  const IdentityCheck& c = find_identity(GetParam());
  for (int n = c.min_n; n <= std::min(4, c.max_n); ++n) {
    const IdentityReport r = run_check(c.id, n, 3, 2024);
    EXPECT_TRUE(r.passed()) << report_text(r, false);
  }
}

std::vector<std::string> ids() {
  std::vector<std::string> out;
  for (const auto& c : identity_registry()) out.push_back(c.id);
  return out;
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryCheck, ::testing::ValuesIn(ids()));

TEST(RunCheck, FixtureCayleyHamilton) {
  const Bindings fixture{{"A", parse_matrix({{"2", "3"}, {"4", "5"}})}};
  const IdentityReport r = run_check("cayley_hamilton", 2, 1, 0, &fixture);
  EXPECT_TRUE(r.passed());
}

TEST(RunCheck, ClosedNodePairAtThree) {
  EXPECT_TRUE(run_check("asym_special_cases", 3, 2, 5).passed());
}

TEST(RunCheck, FailureCarriesCounterexample) {
  // A fixture that is not invertible makes the inverse-based relation throw.
  const Bindings fixture{{"A", parse_matrix({{"1", "2"}, {"2", "4"}})}};
  const IdentityReport r = run_check("matrix_invariance", 2, 3, 9, &fixture);
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->trial, 0);
  EXPECT_EQ(r.failure->matrices.count("A"), 1u);
  EXPECT_NE(report_text(r, false).find("A = [[1,2],[2,4]]"), std::string::npos);
}

TEST(RunAll, SeededRerunIsIdentical) {
  auto render = [](const std::vector<IdentityReport>& rs) {
    std::string s;
    for (const auto& r : rs) s += report_json(r, false) + "\n";
    return s;
  };
  const auto a = run_all(3, 2, 99);
  const auto b = run_all(3, 2, 99);
  EXPECT_EQ(render(a), render(b));
  for (const auto& r : a) EXPECT_TRUE(r.passed()) << r.id;
  for (const auto& r : a) EXPECT_NE(r.id, "jacobi");
}

}  // namespace
