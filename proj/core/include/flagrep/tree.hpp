#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagrep/combinatorics.hpp"
#include "flagrep/complex.hpp"

namespace flagrep {

enum class NodeKind { Root, Trivalent, Terminal };

struct TreeNode {
  NodeKind kind = NodeKind::Terminal;
  int parent = -1;
  int left = -1;   // the root keeps its single child here
  int right = -1;
  int color = 0;   // trivalent nodes
  Tuple label;     // terminal nodes; the root carries a
  bool operator==(const TreeNode&) const = default;
};

// Nested description used to build trees by hand.
struct TreeSpec {
  int color = 0;
  Tuple label;
  std::vector<TreeSpec> children;
};
TreeSpec leaf_spec(Tuple label);
TreeSpec node_spec(int color, TreeSpec left, TreeSpec right);

// Planted trivalent tree with labels, stored in depth-first preorder:
// node 0 is r_0, node 1 is r_1, and D(x) is the index range [x, end(x)).
class MacaulayTree {
 public:
  MacaulayTree() = default;
  // Nodes may be in any order as long as node 0 is the root; they are reindexed.
  MacaulayTree(Tuple a, const std::vector<TreeNode>& nodes);
  MacaulayTree(Tuple a, const TreeSpec& r1);

  const Tuple& type() const { return a_; }
  int n() const { return static_cast<int>(a_.size()); }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int x) const { return nodes_[x]; }

  bool is_leaf(int x) const { return nodes_[x].kind == NodeKind::Terminal; }
  bool is_trivalent(int x) const { return nodes_[x].kind == NodeKind::Trivalent; }
  int left(int x) const { return nodes_[x].left; }
  int right(int x) const { return nodes_[x].right; }
  int parent(int x) const { return nodes_[x].parent; }
  int color(int x) const { return nodes_[x].color; }
  const Tuple& label(int x) const { return nodes_[x].label; }
  int end(int x) const { return end_[x]; }
  bool in_subtree(int y, int x) const { return x <= y && y < end_[x]; }

  std::vector<int> leaves() const;
  std::vector<int> trivalents() const;
  // r_0, ..., x
  std::vector<int> path_to(int x) const;
  std::vector<int> right_relatives(int x) const;
  int leftmost_leaf(int x) const;

  bool operator==(const MacaulayTree& o) const { return a_ == o.a_ && nodes_ == o.nodes_; }

 private:
  Tuple a_;
  std::vector<TreeNode> nodes_;
  std::vector<int> end_;
};

struct DerivedLabels {
  std::vector<Tuple> nu;
  std::vector<Tuple> omega;  // omega[0] is set to the weight
  Tuple weight;
};
DerivedLabels derived_labels(const MacaulayTree& t);

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> failures;
  Count N = 0;
};
ValidityReport validate(const MacaulayTree& t);

bool is_leading(const MacaulayTree& t, int x, int level);
std::vector<int> leading_vertices(const MacaulayTree& t, int level);
std::optional<int> find_cloning_vertex(const MacaulayTree& t);
bool is_condensed(const MacaulayTree& t);

struct CondenseOptions {
  // Test-only: the printed rule without the label increment.
  bool literal = false;
  // Pick cloning vertices in a shuffled order.
  std::optional<unsigned> shuffle_seed;
};
MacaulayTree condensation(const MacaulayTree& t, const CondenseOptions& opts = {});

Count partial_diff(const MacaulayTree& t, const Tuple& x);
Count represented_number(const MacaulayTree& t);

// psi(u) as (rank, color) vertices
std::vector<Vertex> psi(const MacaulayTree& t, const DerivedLabels& d, int x);
ColoredComplex realize(const MacaulayTree& t);

std::string to_dot(const MacaulayTree& t);

}  // namespace flagrep
