#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagrep {

using Tuple = std::vector<int>;
using Count = std::int64_t;
// Sorted ascending, elements are 1-based ranks.
using Subset = std::vector<int>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

Count checked_add(Count x, Count y);
Count checked_mul(Count x, Count y);

// C(n, k); zero when k < 0 or k > n.
Count binom(Count n, Count k);
// Product of C(x_i, y_i).
Count binom_tuple(const Tuple& x, const Tuple& y);

int total(const Tuple& x);
Tuple delta(int color, int n);  // color is 1-based
Tuple add(const Tuple& x, const Tuple& y);
Tuple sub(const Tuple& x, const Tuple& y);
bool leq(const Tuple& x, const Tuple& y);
// x <= y and x != y
bool lt(const Tuple& x, const Tuple& y);
// x is covered by y: x < y and |y| = |x| + 1
bool covered_by(const Tuple& x, const Tuple& y);
bool is_zero(const Tuple& x);
void require_same_length(const Tuple& x, const Tuple& y, const char* what);
std::string to_string(const Tuple& x);

// All b with 0 <= b <= a in mixed-radix order (first coordinate fastest).
std::vector<Tuple> box(const Tuple& a);

bool colex_less(const Subset& x, const Subset& y);
// Rank within k-subsets of the positive integers, 0-based.
Count colex_rank(const Subset& x);
std::vector<Subset> colex_initial_segment(int m, int k, Count count);
// Colex-largest k-subset of [m].
Subset colex_largest(int m, int k);
std::vector<Subset> k_subsets(int m, int k);

// Pairs (N_i, i) with N = sum C(N_i, i), i descending from k.
std::vector<std::pair<Count, int>> classic_macaulay_rep(Count N, int k);
// Upper bound of the classic shadow: sum C(N_i, i-1).
Count classic_shadow(Count N, int k);

bool is_permuted_refinement(const Tuple& a, const Tuple& b);

// Entry i is |S_i| when nonzero, otherwise x_i.
Tuple kappa(const std::vector<int>& part_sizes, const Tuple& x);

}  // namespace flagrep
