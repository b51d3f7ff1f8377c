#include "flagrep/shedding.hpp"

#include <algorithm>
#include <sstream>

#include "flagrep/structure.hpp"

namespace flagrep {

namespace {

struct RawNode {
  TreeNode node;
  SheddingTerminal info;
};

std::vector<int> preorder(const std::vector<RawNode>& raw) {
  std::vector<int> order, stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    const TreeNode& nd = raw[x].node;
    if (nd.kind == NodeKind::Root) stack.push_back(nd.left);
    if (nd.kind == NodeKind::Trivalent) {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
  return order;
}

MacaulayTree shape_of(const Tuple& a, const std::vector<RawNode>& raw) {
  std::vector<TreeNode> nodes;
  nodes.reserve(raw.size());
  for (const RawNode& r : raw) {
    TreeNode nd = r.node;
    if (nd.kind == NodeKind::Terminal) nd.label = r.info.lambda;
    nodes.push_back(std::move(nd));
  }
  return MacaulayTree(a, nodes);
}

std::vector<Mask> parts_of(const ColoredComplex& c) {
  std::vector<Mask> p;
  for (int t = 1; t <= c.n(); ++t) p.push_back(c.present(t));
  return p;
}

Tuple part_sizes(const std::vector<Mask>& parts) {
  Tuple s;
  for (Mask m : parts) s.push_back(popcount(m));
  return s;
}

void check_conservation(const SheddingTerminal& parent, const SheddingTerminal& dl, const SheddingTerminal& lk, int t) {
  const FineVector fp = fine_f_vector(parent.complex), fd = fine_f_vector(dl.complex), fl = fine_f_vector(lk.complex);
  const Tuple d = delta(t, static_cast<int>(parent.a.size()));
  for (const Tuple& b : box(parent.a)) {
    Tuple bl = sub(b, d);
    Count rhs = fd.at(b) + (bl[t - 1] < 0 ? 0 : fl.at(bl));
    if (fp.at(b) != rhs) throw StructureError("shedding: split does not conserve f_" + to_string(b));
  }
}

}  // namespace

SheddingTree shedding_tree(const ColoredComplex& c, const SheddingOptions& opts) {
  if (!c.is_pure() || !c.is_balanced()) throw StructureError("shedding_tree: need a pure balanced complex");
  if (!is_color_shifted(c) && !is_color_compressed(c))
    throw StructureError("shedding_tree: need a color-shifted or color-compressed complex");
  const int n = c.n();
  std::vector<RawNode> raw(2);
  raw[0].node.kind = NodeKind::Root;
  raw[0].node.left = 1;
  raw[1].node.kind = NodeKind::Terminal;
  raw[1].node.parent = 0;
  raw[1].info = {c.type(), c, parts_of(c), kappa(part_sizes(parts_of(c)), c.lambda())};
  SheddingTree out;
  auto snapshot = [&] {
    if (opts.keep_sequence) out.sequence.push_back({shape_of(c.type(), raw), preorder(raw)});
  };
  snapshot();
  for (int t = n; t >= 1;) {
    std::vector<int> order = preorder(raw);
    if (opts.policy == TerminalPolicy::Last) std::reverse(order.begin(), order.end());
    int v = -1;
    for (int x : order) {
      if (raw[x].node.kind != NodeKind::Terminal) continue;
      const SheddingTerminal& s = raw[x].info;
      if (!is_t_factorizable(s.complex, t, s.parts[t - 1], s.a[t - 1])) {
        v = x;
        break;
      }
    }
    if (v < 0) {
      --t;
      continue;
    }
    SheddingTerminal parent = raw[v].info;
    Mask vt = parent.parts[t - 1];
    if (vt == 0) throw StructureError("shedding_tree: no vertex of the color to split at");
    const int b = 63 - __builtin_clzll(vt);
    const Mask x = Mask{1} << b;
    const Tuple lam = sub(parent.lambda, delta(t, n));
    SheddingTerminal dl, lk;
    dl.complex = deletion(parent.complex, x);
    dl.a = parent.a;
    dl.parts = parts_of(dl.complex);
    dl.lambda = kappa(part_sizes(dl.parts), lam);
    lk.complex = link(parent.complex, x);
    lk.a = sub(parent.a, delta(t, n));
    lk.parts = parts_of(lk.complex);
    lk.lambda = kappa(part_sizes(lk.parts), lam);
    check_conservation(parent, dl, lk, t);
    const int l = static_cast<int>(raw.size());
    raw.push_back({TreeNode{NodeKind::Terminal, v, -1, -1, 0, {}}, std::move(dl)});
    raw.push_back({TreeNode{NodeKind::Terminal, v, -1, -1, 0, {}}, std::move(lk)});
    raw[v].node.kind = NodeKind::Trivalent;
    raw[v].node.color = t;
    raw[v].node.left = l;
    raw[v].node.right = l + 1;
    raw[v].info = {};
    out.splits.push_back(c.vertex(b));
    snapshot();
  }
  out.shape = shape_of(c.type(), raw);
  std::vector<int> order = preorder(raw);
  out.terminals.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    if (raw[order[i]].node.kind == NodeKind::Terminal) out.terminals[i] = std::move(raw[order[i]].info);
  return out;
}

MacaulayTree induced_macaulay_tree(const SheddingTree& s) { return s.shape; }

Count fine_f_from_tree(const SheddingTree& s, const Tuple& b) {
  const Tuple& a = s.shape.type();
  require_same_length(a, b, "fine_f_from_tree");
  Count sum = 0;
  for (int u : s.shape.leaves()) {
    const SheddingTerminal& info = s.terminals[u];
    sum = checked_add(sum, binom_tuple(info.lambda, add(info.a, sub(b, a))));
  }
  return sum;
}

std::string shedding_to_dot(const SheddingTree& s, bool verbose_labels) {
  const MacaulayTree& t = s.shape;
  std::ostringstream os;
  os << "digraph SheddingTree {\n  node [shape=point];\n";
  for (int x = 0; x < t.size(); ++x) {
    os << "  n" << x;
    if (x == 0) {
      os << " [xlabel=\"" << to_string(t.type()) << "\"]";
    } else if (t.is_trivalent(x)) {
      os << " [xlabel=\"" << t.color(x) << "\"]";
    } else {
      const SheddingTerminal& info = s.terminals[x];
      os << " [xlabel=\"";
      if (verbose_labels) {
        os << to_string(info.a) << ", " << info.complex.facets().size() << " facets, (";
        for (std::size_t c = 0; c < info.parts.size(); ++c) {
          if (c) os << ", ";
          os << "{";
          bool first = true;
          for (const Vertex& v : info.complex.vertices_of(info.parts[c])) {
            os << (first ? "" : ",") << v.rank;
            first = false;
          }
          os << "}";
        }
        os << "), " << to_string(info.lambda);
      } else {
        os << to_string(info.lambda);
      }
      os << "\"]";
    }
    os << ";\n";
  }
  for (int x = 0; x < t.size(); ++x) {
    if (t.left(x) >= 0) os << "  n" << x << " -> n" << t.left(x) << ";\n";
    if (t.right(x) >= 0) os << "  n" << x << " -> n" << t.right(x) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace flagrep
