#include <set>

#include "doctest.h"
#include "flagrep/combinatorics.hpp"

using namespace flagrep;

namespace {

// Number of expansions N = C(n_k, k) + ... + C(n_j, j) with n_k > ... > n_j >= j >= 1.
int expansions(Count N, int k, Count upper) {
  if (N == 0) return 1;
  if (k == 0) return 0;
  int found = 0;
  for (Count n = k; n < upper; ++n) {
    Count c = binom(n, k);
    if (c > N) break;
    found += expansions(N - c, k - 1, n);
  }
  return found;
}

}  // namespace

TEST_CASE("binom_tuple") {
  CHECK(binom_tuple({3, 2}, {1, 1}) == 6);
  CHECK(binom_tuple({1, 3}, {1, -1}) == 0);
  CHECK(binom_tuple({4, 3}, {2, 2}) == 18);
  CHECK(binom_tuple({}, {}) == 1);
  CHECK_THROWS_AS(binom_tuple({1, 2}, {1}), DimensionError);
  CHECK_THROWS_AS(binom(1LL << 62, 3), std::overflow_error);
}

TEST_CASE("colex initial segments") {
  std::vector<Subset> s = colex_initial_segment(5, 3, 6);
  CHECK(s == std::vector<Subset>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}});
  CHECK(colex_initial_segment(4, 2, 0).empty());
  CHECK(colex_initial_segment(4, 1, 3) == std::vector<Subset>{{1}, {2}, {3}});
  CHECK_THROWS_AS(colex_initial_segment(4, 2, 7), CapacityError);
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k <= m; ++k) {
      std::vector<Subset> all = k_subsets(m, k);
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(colex_rank(all[i]) == static_cast<Count>(i));
        if (i) CHECK(colex_less(all[i - 1], all[i]));
      }
      if (!all.empty()) CHECK(colex_largest(m, k) == all.back());
    }
}

TEST_CASE("colex segments are closed under the shadow") {
  for (int m = 2; m <= 7; ++m)
    for (int k = 2; k <= m; ++k)
      for (Count N = 1; N <= binom(m, k); ++N) {
        std::set<Subset> shadow;
        for (const Subset& s : colex_initial_segment(m, k, N))
          for (std::size_t i = 0; i < s.size(); ++i) {
            Subset t = s;
            t.erase(t.begin() + static_cast<long>(i));
            shadow.insert(t);
          }
        std::vector<Subset> want = colex_initial_segment(m, k - 1, static_cast<Count>(shadow.size()));
        CHECK(std::set<Subset>(want.begin(), want.end()) == shadow);
        CHECK(static_cast<Count>(shadow.size()) == classic_shadow(N, k));
      }
}

TEST_CASE("classic Macaulay representation") {
  using Rep = std::vector<std::pair<Count, int>>;
  CHECK(classic_macaulay_rep(6, 3) == Rep{{4, 3}, {2, 2}, {1, 1}});
  CHECK(classic_macaulay_rep(1, 4) == Rep{{4, 4}});
  CHECK(classic_macaulay_rep(10, 3) == Rep{{5, 3}});
  CHECK(classic_shadow(6, 3) == 9);
  CHECK_THROWS_AS(classic_macaulay_rep(3, 0), DomainError);

  long bad = 0;
  for (int k = 1; k <= 8; ++k)
    for (Count N = 1; N <= 100000; ++N) {
      Count s = 0;
      Count last = 1LL << 40;
      for (auto [n, i] : classic_macaulay_rep(N, k)) {
        if (n >= last || n < i) ++bad;
        last = n;
        s += binom(n, i);
      }
      if (s != N) ++bad;
    }
  CHECK(bad == 0);
  for (int k = 1; k <= 4; ++k)
    for (Count N = 1; N <= 200; ++N) CHECK(expansions(N, k, 1 << 20) == 1);
}

TEST_CASE("permuted refinement") {
  CHECK_FALSE(is_permuted_refinement({2, 2}, {3, 1}));
  CHECK(is_permuted_refinement({1, 1, 1}, {1, 2}));
  CHECK(is_permuted_refinement({2, 1}, {3}));
  CHECK(is_permuted_refinement({1, 2}, {2, 1}));
  CHECK_FALSE(is_permuted_refinement({3}, {1, 2}));
}

TEST_CASE("kappa") {
  CHECK(kappa({1, 0}, {1, 3}) == Tuple{1, 3});
  CHECK(kappa({2, 1}, {9, 9}) == Tuple{2, 1});
  CHECK(kappa({0, 0}, {4, 3}) == Tuple{4, 3});
  CHECK_THROWS_AS(kappa({1, 0}, {1, 0}), DomainError);
}
