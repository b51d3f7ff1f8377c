#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagrep/complex.hpp"
#include "flagrep/macaulay.hpp"

namespace flagrep {

struct EnumOptions {
  int jobs = 1;
  // Labels used at coordinates where a is zero; defaults to all ones.
  std::optional<Tuple> zero_fill;
};

// All condensed compressed-like compatible a-Macaulay trees of N, sorted canonically.
std::vector<MacaulayTree> enumerate_reps(const Tuple& a, Count N, const EnumOptions& opts = {});

// Total order used to sort enumeration output.
bool canonical_less(const MacaulayTree& x, const MacaulayTree& y);

struct Feasibility {
  bool feasible = false;
  std::string reason;
  // (b, alpha_b); a single entry (a, alpha) for the pure checks
  std::vector<std::pair<Tuple, GeneralizedRep>> witnesses;
};

Feasibility check_pure_balanced_fine_f(const Tuple& a, const FineVector& f);
Feasibility check_fine_f_colored(const Tuple& a, const FineVector& f);
// f and h are indexed by subsets of [d] through their indicator vectors.
Feasibility check_flag_f_cm(int d, const FineVector& f);
Feasibility check_flag_h_cm(int d, const FineVector& h);

// Searches all flag h-vectors whose collapse is `collapsed` (h_0, ..., h_d) for one passing check_flag_h_cm.
std::optional<FineVector> refine_collapsed_h(int d, const std::vector<Count>& collapsed);

// f_b = partial_diff(alpha, b - a) for all b <= a
FineVector fine_f_from_rep(const MacaulayTree& alpha);

}  // namespace flagrep
