#include <gtest/gtest.h>

#include "gen.hpp"
#include "td/permutation.hpp"

using td::Permutation;

namespace {

TEST(Permutation, Basics) {
  const Permutation p({2, 3, 1});
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p.sign(), 1);
  EXPECT_EQ(Permutation({2, 1, 3}).sign(), -1);
  EXPECT_EQ(p.inverse().images(), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(p.compose(p.inverse()), Permutation::identity(3));
  EXPECT_EQ(p.cycles().size(), 1u);
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(Permutation, ReversalSign) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(td::reversal_sign(n), Permutation::reversal(n).sign()) << n;
  EXPECT_EQ(td::reversal_sign(2), -1);
  EXPECT_EQ(td::reversal_sign(3), -1);
  EXPECT_EQ(td::reversal_sign(4), 1);
}

TEST(Permutation, LeviCivita) {
  EXPECT_EQ(td::levi_civita(std::vector<int>{1, 2, 3}), 1);
  EXPECT_EQ(td::levi_civita(std::vector<int>{2, 1, 3}), -1);
  EXPECT_EQ(td::levi_civita(std::vector<int>{1, 1, 3}), 0);
  EXPECT_EQ(td::levi_civita(std::vector<int>{}), 1);
}

TEST(Permutation, AllPermutationsLexicographic) {
  const auto all = td::all_permutations(4);
  ASSERT_EQ(all.size(), 24u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].images(), all[i].images());
  int total = 0;
  for (const auto& p : all) total += p.sign();
  EXPECT_EQ(total, 0);
}

TEST(PermutationProperty, SignIsMultiplicative) {
  gen::Gen g(21);
  for (int i = 0; i < 300; ++i) {
    const int m = static_cast<int>(g.integer(1, 7));
    auto make = [&] {
      auto v = g.shuffled(m);
      for (int& x : v) ++x;
      return Permutation(v);
    };
    const Permutation a = make(), b = make();
    EXPECT_EQ(a.compose(b).sign(), a.sign() * b.sign());
    EXPECT_EQ(a.inverse().sign(), a.sign());
    EXPECT_EQ(td::levi_civita(a.images()), a.sign());
    int parity = 0;
    for (const auto& c : a.cycles()) parity += static_cast<int>(c.size()) - 1;
    EXPECT_EQ(a.sign(), parity % 2 ? -1 : 1);
  }
}

}  // namespace
