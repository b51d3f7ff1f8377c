#pragma once

#include <vector>

#include "flagrep/combinatorics.hpp"
#include "flagrep/complex.hpp"

namespace flagrep {

constexpr int kUnbounded = -1;

// Exponent vector over all variables, grouped by color.
using Monomial = std::vector<int>;

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ColoredMulticomplex {
 public:
  ColoredMulticomplex() = default;
  // Takes the divisor closure of the given monomials.
  ColoredMulticomplex(std::vector<int> vars_per_color, std::vector<int> caps, const std::vector<Monomial>& monomials,
                      Tuple type = {});

  int n() const { return static_cast<int>(vars_.size()); }
  int num_vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& vars_per_color() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  const Tuple& type() const { return type_; }
  // Sorted, divisor-closed, contains the zero vector.
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::vector<Monomial> maximal_monomials() const;
  bool contains(const Monomial& m) const;

  int first_var(int color) const;  // color is 1-based
  Tuple multidegree(const Monomial& m) const;
  // Fine f-vector over the type; a type of max multidegrees is used when none was attached.
  FineVector fine_f_vector() const;

  bool operator==(const ColoredMulticomplex& o) const {
    return vars_ == o.vars_ && caps_ == o.caps_ && monomials_ == o.monomials_;
  }

 private:
  std::vector<int> vars_;
  std::vector<int> caps_;
  Tuple type_;
  std::vector<Monomial> monomials_;
};

// alpha <lex beta iff alpha_i < beta_i at the largest differing index.
bool lex_less(const std::vector<int>& x, const std::vector<int>& y);
// All exponent vectors of the given degree within caps, in lex order.
std::vector<std::vector<int>> lex_degree_block(const std::vector<int>& caps, int degree);

bool is_divisor_closed(const std::vector<Monomial>& sorted_monomials);

ColoredMulticomplex compress_t(const ColoredMulticomplex& m, int t);
struct FixpointResult {
  ColoredMulticomplex result;
  std::vector<int> colors;
};
FixpointResult color_compress_fixpoint(const ColoredMulticomplex& m);
bool is_color_compressed_mc(const ColoredMulticomplex& m);
// Sum over monomials p and colors i of #{q of the same degree : q <=lex p_{X_i}}.
Count compression_score(const ColoredMulticomplex& m);

// Squarefree encoding: one variable per universe vertex, caps 1.
ColoredMulticomplex from_complex(const ColoredComplex& c);
ColoredComplex to_complex(const ColoredMulticomplex& m, const Tuple& a);

}  // namespace flagrep
