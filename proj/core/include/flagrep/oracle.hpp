#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagrep/complex.hpp"

namespace flagrep {

struct OracleFilter {
  bool pure = false;
  bool balanced = false;
  bool color_shifted = false;
  bool color_compressed = false;
  // every color has at least one vertex
  bool all_colors = false;
  std::optional<std::size_t> facets;
  // one representative per class under rank permutations within colors
  bool up_to_iso = false;

  std::string key() const;
};

// All a-colored complexes on ([lambda_1]_1, ..., [lambda_n]_n) passing the filter.
// Throws CapacityError beyond 24 admissible nonempty faces.
std::vector<ColoredComplex> enumerate_complexes(const Tuple& a, const Tuple& lambda, const OracleFilter& filter = {});
void for_each_complex(const Tuple& a, const Tuple& lambda, const std::function<void(const ColoredComplex&)>& visit);

ColoredComplex canonical_form(const ColoredComplex& c);

std::set<FineVector> achievable_fine_f(const Tuple& a, const Tuple& lambda_max);

// Arrays with f_0 = 1, 1 <= f_{delta_i} <= lambda_max_i and 0 <= f_b <= prod C(f_{delta_i}, b_i).
std::vector<FineVector> candidate_arrays(const Tuple& a, const Tuple& lambda_max);

struct CrossReport {
  bool match = true;
  std::size_t achievable = 0;
  std::size_t feasible = 0;
  std::vector<FineVector> only_achievable;
  std::vector<FineVector> only_feasible;
};
CrossReport cross_validate(const Tuple& a, const Tuple& lambda_max);

// Pure color-compressed a-balanced complexes with N facets, one per class.
// Facet sets of such complexes are down-sets in the product of colex chains.
std::vector<ColoredComplex> compressed_census(const Tuple& a, int N);

}  // namespace flagrep
