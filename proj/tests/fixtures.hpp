#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>

#include "flagrep/complex.hpp"
#include "flagrep/io.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/tree.hpp"

namespace fixtures {

using namespace flagrep;

inline std::filesystem::path data_dir() { return FLAGREP_DATA_DIR; }

inline std::string load(const std::string& name) { return read_file(data_dir() / (name + ".json")); }

// Sigma: type (1,1) on ([3]_1, [4]_2)
inline ColoredComplex sigma() { return complex_from_json(load("fig2")); }

// Pure 2-complex with facets 123,124,134,234,125,135
inline ColoredComplex fig1_complex() { return complex_from_json(load("fig1")); }

inline MacaulayTree fig1_tree() {
  return MacaulayTree({3}, node_spec(1, leaf_spec({4}), node_spec(1, leaf_spec({2}), leaf_spec({1}))));
}

inline MacaulayTree fig2_tree() {
  return MacaulayTree({1, 1}, node_spec(2, node_spec(2, leaf_spec({3, 2}), leaf_spec({1, 2})), leaf_spec({1, 3})));
}

inline MacaulayTree not_shifted_tree() {
  return MacaulayTree({1, 1}, node_spec(2, node_spec(2, leaf_spec({3, 1}), leaf_spec({1, 1})), leaf_spec({2, 2})));
}

inline MacaulayTree condensed_tree() {
  return MacaulayTree({2, 2}, node_spec(2, leaf_spec({4, 3}), leaf_spec({3, 3})));
}

inline MacaulayTree uncondensed_tree() {
  return MacaulayTree({2, 2}, node_spec(2, leaf_spec({4, 3}), node_spec(1, leaf_spec({2, 3}), leaf_spec({2, 3}))));
}

inline MacaulayTree alpha_tree() {
  return MacaulayTree({2, 2}, node_spec(2, leaf_spec({4, 3}), node_spec(1, leaf_spec({2, 3}), leaf_spec({1, 3}))));
}

inline MacaulayTree alpha_prime_tree() {
  return MacaulayTree({1, 1}, node_spec(2, node_spec(2, leaf_spec({5, 2}), leaf_spec({4, 2})), leaf_spec({3, 3})));
}

inline MacaulayTree twin_tree() { return MacaulayTree({1, 1}, node_spec(2, leaf_spec({4, 3}), leaf_spec({3, 3}))); }

inline MacaulayTree wedge_tree() {
  return MacaulayTree(
      {1, 1, 2},
      node_spec(3, node_spec(2, node_spec(2, leaf_spec({5, 2, 2}), leaf_spec({4, 2, 2})), leaf_spec({3, 3, 2})),
                node_spec(2, leaf_spec({4, 3, 1}), leaf_spec({3, 3, 1}))));
}

// The full simplex with a_c vertices of color c.
inline ColoredComplex simplex(const Tuple& a) {
  std::vector<Vertex> f;
  for (int c = 1; c <= static_cast<int>(a.size()); ++c)
    for (int r = 1; r <= a[c - 1]; ++r) f.push_back({r, c});
  return ColoredComplex::from_facets(a, a, {f});
}

// n <= 3 colors, <= 4 variables per color, caps <= 2 and non-increasing within a color.
inline ColoredMulticomplex random_multicomplex(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<int> vars(pick(1, 3));
  std::vector<int> caps;
  for (int& v : vars) {
    v = pick(1, 4);
    std::vector<int> c(v);
    for (int& x : c) x = pick(1, 2);
    std::sort(c.rbegin(), c.rend());
    caps.insert(caps.end(), c.begin(), c.end());
  }
  std::vector<Monomial> gens(pick(1, 5), Monomial(caps.size(), 0));
  for (Monomial& m : gens)
    for (std::size_t i = 0; i < caps.size(); ++i) m[i] = pick(0, caps[i]) * pick(0, 1);
  return ColoredMulticomplex(vars, caps, gens);
}

}  // namespace fixtures
