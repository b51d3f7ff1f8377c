#include "doctest.h"
#include "fixtures.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"

using namespace flagrep;

namespace {

std::vector<ColoredComplex> shifted_pure_balanced() {
  std::vector<ColoredComplex> out;
  OracleFilter f;
  f.pure = f.balanced = f.color_shifted = true;
  for (const auto& [a, lambda] : std::vector<std::pair<Tuple, Tuple>>{
           {{1, 1}, {4, 4}}, {{2}, {5}}, {{2, 1}, {3, 2}}, {{1, 1, 1}, {2, 2, 1}}, {{1, 2}, {2, 3}}}) {
    std::vector<ColoredComplex> cs = enumerate_complexes(a, lambda, f);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

}  // namespace

TEST_CASE("shedding tree of Sigma") {
  SheddingTree s = shedding_tree(fixtures::sigma());
  CHECK(s.shape == fixtures::fig2_tree());
  CHECK(s.splits == std::vector<Vertex>{{4, 2}, {3, 2}});
  CHECK(induced_macaulay_tree(s) == fixtures::fig2_tree());
  CHECK(fine_f_from_tree(s, {1, 1}) == 8);
  CHECK(fine_f_from_tree(s, {1, 0}) == 3);
  CHECK(fine_f_from_tree(s, {0, 1}) == 4);
}

TEST_CASE("shedding tree of a rib") {
  ColoredComplex r = build_rib({3, 2}, {1, 1});
  SheddingTree s = shedding_tree(r);
  CHECK(s.shape.size() == 2);
  CHECK(s.splits.empty());
  CHECK(induced_macaulay_tree(s) == MacaulayTree({1, 1}, leaf_spec({3, 2})));
}

TEST_CASE("shedding tree of the 6-facet 2-complex") {
  SheddingTree s = shedding_tree(fixtures::fig1_complex());
  CHECK(induced_macaulay_tree(s) == fixtures::fig1_tree());
  std::vector<Tuple> leaves;
  for (int u : s.shape.leaves()) leaves.push_back(s.shape.label(u));
  CHECK(leaves == std::vector<Tuple>{{4}, {2}, {1}});
}

TEST_CASE("shedding rejects unshifted input") {
  CHECK_THROWS_AS(shedding_tree(realize(fixtures::not_shifted_tree())), StructureError);
  CHECK_THROWS_AS(shedding_tree(skeleton(fixtures::simplex({3}), 0)), StructureError);
}

TEST_CASE("shedding invariants over small shifted complexes") {
  std::vector<ColoredComplex> cs = shifted_pure_balanced();
  CHECK(cs.size() > 100);
  for (const ColoredComplex& c : cs) {
    SheddingTree first = shedding_tree(c, {TerminalPolicy::First, true});
    SheddingTree last = shedding_tree(c, {TerminalPolicy::Last, false});
    CHECK(first.shape == last.shape);

    FineVector f = fine_f_vector(c);
    for (const Tuple& b : f.keys()) CHECK(fine_f_from_tree(first, b) == f.at(b));

    const SheddingStep& fin = first.sequence.back();
    DerivedLabels df = derived_labels(fin.tree);
    for (const SheddingStep& step : first.sequence) {
      DerivedLabels d = derived_labels(step.tree);
      for (int p = 1; p < step.tree.size(); ++p) {
        if (!step.tree.is_trivalent(p)) continue;
        auto q = std::find(fin.raw_id.begin(), fin.raw_id.end(), step.raw_id[p]) - fin.raw_id.begin();
        CHECK(d.omega[p] == df.omega[q]);
      }
    }
  }
}
