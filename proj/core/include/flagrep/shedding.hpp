#pragma once

#include <string>
#include <vector>

#include "flagrep/complex.hpp"
#include "flagrep/tree.hpp"

namespace flagrep {

struct SheddingTerminal {
  Tuple a;
  ColoredComplex complex;
  std::vector<Mask> parts;  // pi' as present vertices per color
  Tuple lambda;
};

enum class TerminalPolicy { First, Last };

struct SheddingOptions {
  TerminalPolicy policy = TerminalPolicy::First;
  bool keep_sequence = false;
};

// One pair of a shedding sequence; raw_id maps preorder positions of `tree`
// to node ids that stay fixed along the sequence.
struct SheddingStep {
  MacaulayTree tree;
  std::vector<int> raw_id;
};

struct SheddingTree {
  // Induced Macaulay tree; terminal labels are the lambda' tuples.
  MacaulayTree shape;
  // Indexed by node of `shape`; only terminals are filled.
  std::vector<SheddingTerminal> terminals;
  // Splits performed, in order, as (color, vertex).
  std::vector<Vertex> splits;
  std::vector<SheddingStep> sequence;
};

SheddingTree shedding_tree(const ColoredComplex& c, const SheddingOptions& opts = {});
MacaulayTree induced_macaulay_tree(const SheddingTree& s);
Count fine_f_from_tree(const SheddingTree& s, const Tuple& b);
std::string shedding_to_dot(const SheddingTree& s, bool verbose_labels = false);

}  // namespace flagrep
