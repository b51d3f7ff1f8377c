#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/structure.hpp"

using namespace flagrep;

namespace {

// x_i y_j over three x's and three y's
Monomial xy(int i, int j) {
  Monomial m(6, 0);
  m[i - 1] = 1;
  m[2 + j] = 1;
  return m;
}

ColoredMulticomplex example_m() {
  return ColoredMulticomplex({3, 3}, std::vector<int>(6, 1),
                             {xy(1, 1), xy(1, 2), xy(1, 3), xy(2, 1), xy(2, 2), xy(3, 1), xy(3, 3)});
}

std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("compress_t on the example") {
  ColoredMulticomplex m = example_m();
  ColoredMulticomplex c1 = compress_t(m, 1);
  ColoredMulticomplex c2 = compress_t(m, 2);
  CHECK(sorted(c1.maximal_monomials()) ==
        sorted({xy(1, 1), xy(2, 1), xy(3, 1), xy(1, 2), xy(2, 2), xy(1, 3), xy(2, 3)}));
  CHECK(sorted(c2.maximal_monomials()) ==
        sorted({xy(1, 1), xy(1, 2), xy(1, 3), xy(2, 1), xy(2, 2), xy(3, 1), xy(3, 2)}));
  CHECK_FALSE(c1 == c2);
  CHECK(compress_t(c1, 1) == c1);
  CHECK(compress_t(c1, 2) == c1);
}

TEST_CASE("fixpoint and compressed predicate") {
  ColoredMulticomplex m = example_m();
  FixpointResult r = color_compress_fixpoint(m);
  CHECK(r.result == compress_t(m, 1));
  CHECK(r.colors == std::vector<int>{1});
  CHECK(is_color_compressed_mc(r.result));
  CHECK_FALSE(is_color_compressed_mc(m));
  ColoredMulticomplex one({2, 1}, {1, 1, 1}, {});
  CHECK(is_color_compressed_mc(one));
  CHECK(color_compress_fixpoint(one).colors.empty());
  CHECK(compression_score(compress_t(m, 1)) < compression_score(m));
}

TEST_CASE("non-monotone caps") {
  ColoredMulticomplex m({2}, {1, 2}, {{1, 2}});
  CHECK_THROWS_AS(compress_t(m, 1), PreconditionError);
}

TEST_CASE("random (1,1) multicomplexes reach a compressed fixpoint") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Monomial> gens;
    int k = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int g = 0; g < k; ++g) {
      Monomial mo(6, 0);
      mo[std::uniform_int_distribution<int>(0, 2)(rng)] = 1;
      mo[std::uniform_int_distribution<int>(3, 5)(rng)] = std::uniform_int_distribution<int>(0, 1)(rng);
      gens.push_back(mo);
    }
    ColoredMulticomplex m({3, 3}, std::vector<int>(6, 1), gens, {1, 1});
    FixpointResult r = color_compress_fixpoint(m);
    CHECK(is_color_compressed_mc(r.result));
    CHECK(r.result.fine_f_vector() == m.fine_f_vector());
  }
}

TEST_CASE("compress_t invariants") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    ColoredMulticomplex m = fixtures::random_multicomplex(rng);
    for (int t = 1; t <= m.n(); ++t) {
      ColoredMulticomplex c = compress_t(m, t);
      CHECK(c.fine_f_vector() == m.fine_f_vector());
      CHECK(is_divisor_closed(c.monomials()));
      if (c == m)
        CHECK(compression_score(c) == compression_score(m));
      else
        CHECK(compression_score(c) < compression_score(m));
    }
  }
}

TEST_CASE("squarefree encoding agrees with complex compression") {
  std::mt19937 rng(5);
  const std::vector<std::pair<Tuple, Tuple>> shapes{{{1, 1}, {3, 4}}, {{2, 1}, {4, 3}}, {{1, 1, 1}, {2, 3, 2}}, {{2}, {5}}};
  for (int iter = 0; iter < 200; ++iter) {
    const auto& [a, lambda] = shapes[iter % shapes.size()];
    ColoredComplex full = ColoredComplex::from_facets(a, lambda, {});
    std::vector<Mask> gens;
    for (int g = 0; g < 4; ++g) {
      Mask m = 0;
      for (int c = 1; c <= static_cast<int>(a.size()); ++c)
        for (int r = 1; r <= lambda[c - 1]; ++r)
          if (popcount(m & full.color_mask(c)) < a[c - 1] && std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            m |= full.vertex_mask({r, c});
      gens.push_back(m);
    }
    // the encoding has a variable per universe vertex, so use a complex that covers its universe
    ColoredComplex cx = compact_ranks(ColoredComplex::from_masks(a, lambda, gens));
    if (std::count(cx.lambda().begin(), cx.lambda().end(), 0)) continue;
    CHECK(to_complex(from_complex(cx), a) == cx);
    for (int t = 1; t <= static_cast<int>(a.size()); ++t)
      CHECK(to_complex(compress_t(from_complex(cx), t), a) == color_compress(cx, t));
  }
}
