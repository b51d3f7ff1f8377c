#include "doctest.h"
#include "fixtures.hpp"
#include "flagrep/characterization.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"
#include "flagrep/structure.hpp"

using namespace flagrep;

TEST_CASE("enumerate_complexes") {
  OracleFilter both;
  both.all_colors = true;
  CHECK(enumerate_complexes({1, 1}, {1, 1}, both).size() == 2);
  CHECK(enumerate_complexes({1, 1}, {1, 1}).size() == 5);

  // compressed complexes on a (2,2) universe against the representations that fit in it
  OracleFilter f;
  f.pure = f.balanced = f.color_compressed = f.up_to_iso = true;
  f.facets = 3;
  std::size_t fitting = 0;
  for (const MacaulayTree& t : enumerate_reps({1, 1}, 3)) fitting += leq(derived_labels(t).weight, {2, 2});
  CHECK(enumerate_complexes({1, 1}, {2, 2}, f).size() == fitting);

  OracleFilter g;
  g.pure = g.balanced = true;
  g.facets = 2;
  std::vector<ColoredComplex> two = enumerate_complexes({2}, {4}, g);
  CHECK(two.size() == 15);
  for (const ColoredComplex& c : two) CHECK(c.dim() == 1);

  OracleFilter iso = g;
  iso.up_to_iso = true;
  CHECK(enumerate_complexes({2}, {4}, iso).size() == 2);

  CHECK_THROWS_AS(enumerate_complexes({1, 1}, {5, 5}), CapacityError);
}

TEST_CASE("achievable fine f-vectors") {
  CHECK(achievable_fine_f({1, 1}, {2, 2}).size() == 13);
  std::set<FineVector> kk = achievable_fine_f({1}, {3});
  CHECK(kk.size() == 3);
  for (const FineVector& f : kk) CHECK(f.at({0}) == 1);
}

TEST_CASE("cross validation") {
  for (const auto& [a, lambda] : std::vector<std::pair<Tuple, Tuple>>{{{1, 1}, {2, 2}}, {{1, 1, 1}, {2, 2, 1}}, {{2}, {4}}}) {
    CrossReport r = cross_validate(a, lambda);
    CHECK(r.match);
    CHECK(r.achievable == r.feasible);
    CHECK(r.only_achievable.empty());
    CHECK(r.only_feasible.empty());
  }
}

TEST_CASE("soundness on every complex in range") {
  for (const auto& [a, lambda] : std::vector<std::pair<Tuple, Tuple>>{{{1, 1}, {3, 2}}, {{2}, {4}}, {{1, 1, 1}, {2, 1, 1}}}) {
    std::set<FineVector> seen;
    for_each_complex(a, lambda, [&](const ColoredComplex& c) {
      FineVector f = fine_f_vector(c);
      if (f.at(Tuple(a.size(), 0)) == 0 || !seen.insert(f).second) return;
      bool all = true;
      for (int i = 1; i <= static_cast<int>(a.size()); ++i) all = all && f.at(delta(i, a.size())) > 0;
      if (all) CHECK(check_fine_f_colored(a, f).feasible);
    });
    CHECK(!seen.empty());
  }
}

TEST_CASE("structural facts over the oracle range") {
  for (const auto& [a, lambda] : std::vector<std::pair<Tuple, Tuple>>{{{1, 1}, {3, 3}}, {{2}, {5}}, {{2, 1}, {3, 2}}}) {
    OracleFilter f;
    f.pure = f.balanced = f.color_compressed = true;
    for (const ColoredComplex& c : enumerate_complexes(a, lambda, f)) {
      CHECK(is_color_shifted(c));
      CHECK(realize(induced_macaulay_tree(shedding_tree(c))) == compact_ranks(c));
    }
  }
}

TEST_CASE("canonical form is rank-permutation invariant") {
  ColoredComplex s = fixtures::sigma();
  ColoredComplex p = ColoredComplex::from_facets({1, 1}, {3, 4},
                                                 {{{3, 1}, {1, 2}},
                                                  {{2, 1}, {1, 2}},
                                                  {{1, 1}, {1, 2}},
                                                  {{3, 1}, {2, 2}},
                                                  {{2, 1}, {2, 2}},
                                                  {{1, 1}, {2, 2}},
                                                  {{3, 1}, {3, 2}},
                                                  {{3, 1}, {4, 2}}});
  CHECK(canonical_form(s) == canonical_form(p));
}

TEST_CASE("compressed census") {
  for (int N = 1; N <= 5; ++N) CHECK(compressed_census({1, 1}, N).size() == enumerate_reps({1, 1}, N).size());
  CHECK(compressed_census({1, 1, 1}, 5).size() == 24);
}
