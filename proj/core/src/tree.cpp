#include "flagrep/tree.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace flagrep {

TreeSpec leaf_spec(Tuple label) { return TreeSpec{0, std::move(label), {}}; }

TreeSpec node_spec(int color, TreeSpec left, TreeSpec right) {
  TreeSpec s;
  s.color = color;
  s.children.push_back(std::move(left));
  s.children.push_back(std::move(right));
  return s;
}

MacaulayTree::MacaulayTree(Tuple a, const std::vector<TreeNode>& raw) : a_(std::move(a)) {
  if (raw.empty() || raw[0].kind != NodeKind::Root || raw[0].left < 0)
    throw StructureError("tree: node 0 must be a root with one child");
  // iterative preorder
  std::vector<int> stack{0};
  std::vector<int> order;
  std::vector<int> new_index(raw.size(), -1);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x < 0 || x >= static_cast<int>(raw.size())) throw StructureError("tree: child index out of range");
    if (new_index[x] >= 0) throw StructureError("tree: node reached twice");
    new_index[x] = static_cast<int>(order.size());
    order.push_back(x);
    const TreeNode& nd = raw[x];
    switch (nd.kind) {
      case NodeKind::Root:
        if (x != 0) throw StructureError("tree: extra root");
        stack.push_back(nd.left);
        break;
      case NodeKind::Trivalent:
        if (nd.left < 0 || nd.right < 0) throw StructureError("tree: trivalent node needs two children");
        stack.push_back(nd.right);
        stack.push_back(nd.left);
        break;
      case NodeKind::Terminal:
        break;
    }
  }
  nodes_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    TreeNode nd = raw[order[i]];
    if (nd.left >= 0) nd.left = new_index[nd.left];
    if (nd.right >= 0) nd.right = new_index[nd.right];
    if (nd.kind == NodeKind::Terminal) nd.left = nd.right = -1;
    if (nd.kind != NodeKind::Trivalent) nd.color = 0;
    if (nd.kind == NodeKind::Trivalent) nd.label.clear();
    nd.parent = -1;
    nodes_[i] = std::move(nd);
  }
  nodes_[0].label = a_;
  nodes_[0].right = -1;
  for (int i = 0; i < size(); ++i) {
    if (nodes_[i].left >= 0) nodes_[nodes_[i].left].parent = i;
    if (nodes_[i].right >= 0) nodes_[nodes_[i].right].parent = i;
  }
  end_.assign(nodes_.size(), 0);
  for (int i = size() - 1; i >= 0; --i) {
    const TreeNode& nd = nodes_[i];
    end_[i] = nd.kind == NodeKind::Terminal ? i + 1 : end_[nd.right >= 0 ? nd.right : nd.left];
  }
}

namespace {

void append_spec(std::vector<TreeNode>& out, const TreeSpec& s, int parent) {
  int me = static_cast<int>(out.size());
  TreeNode nd;
  nd.parent = parent;
  if (s.children.empty()) {
    nd.kind = NodeKind::Terminal;
    nd.label = s.label;
    out.push_back(nd);
    return;
  }
  if (s.children.size() != 2) throw StructureError("tree spec: trivalent needs two children");
  nd.kind = NodeKind::Trivalent;
  nd.color = s.color;
  out.push_back(nd);
  out[me].left = static_cast<int>(out.size());
  append_spec(out, s.children[0], me);
  out[me].right = static_cast<int>(out.size());
  append_spec(out, s.children[1], me);
}

std::vector<TreeNode> spec_nodes(const Tuple& a, const TreeSpec& r1) {
  std::vector<TreeNode> out(1);
  out[0].kind = NodeKind::Root;
  out[0].label = a;
  out[0].left = 1;
  append_spec(out, r1, 0);
  return out;
}

}  // namespace

MacaulayTree::MacaulayTree(Tuple a, const TreeSpec& r1) : MacaulayTree(a, spec_nodes(a, r1)) {}

std::vector<int> MacaulayTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_leaf(i)) out.push_back(i);
  return out;
}

std::vector<int> MacaulayTree::trivalents() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (is_trivalent(i)) out.push_back(i);
  return out;
}

std::vector<int> MacaulayTree::path_to(int x) const {
  std::vector<int> p;
  for (int v = x; v >= 0; v = parent(v)) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> MacaulayTree::right_relatives(int x) const {
  std::vector<int> out{x};
  while (is_trivalent(out.back())) out.push_back(right(out.back()));
  return out;
}

int MacaulayTree::leftmost_leaf(int x) const {
  while (!is_leaf(x)) x = left(x);
  return x;
}

DerivedLabels derived_labels(const MacaulayTree& t) {
  DerivedLabels d;
  const int n = t.n();
  d.nu.assign(t.size(), Tuple());
  d.omega.assign(t.size(), Tuple());
  d.nu[0] = t.type();
  if (t.size() > 1) d.nu[1] = t.type();
  for (int x = 1; x < t.size(); ++x) {
    if (!t.is_trivalent(x)) continue;
    d.nu[t.left(x)] = d.nu[x];
    d.nu[t.right(x)] = sub(d.nu[x], delta(t.color(x), n));
  }
  for (int x = t.size() - 1; x >= 1; --x) {
    if (t.is_leaf(x))
      d.omega[x] = t.label(x);
    else
      d.omega[x] = add(d.omega[t.left(x)], delta(t.color(x), n));
  }
  d.weight = t.size() > 1 ? d.omega[1] : Tuple(n, 0);
  d.omega[0] = d.weight;
  return d;
}

ValidityReport validate(const MacaulayTree& t) {
  ValidityReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.failures.push_back(msg);
  };
  const int n = t.n();
  const Tuple& a = t.type();
  // (a)
  if (n < 1 || is_zero(a) || std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }))
    fail("(a) root label must be a nonzero tuple in N^n");
  for (int x = 1; x < t.size(); ++x) {
    if (t.is_trivalent(x) && (t.color(x) < 1 || t.color(x) > n))
      fail("(a) trivalent " + std::to_string(x) + " color outside [n]");
    if (t.is_leaf(x)) {
      const Tuple& l = t.label(x);
      if (static_cast<int>(l.size()) != n || std::any_of(l.begin(), l.end(), [](int v) { return v < 1; }))
        fail("(a) terminal " + std::to_string(x) + " label not in P^n");
    }
  }
  if (!r.ok) return r;
  // (b)
  for (int x : t.trivalents()) {
    int p = t.parent(x);
    if (p > 0 && t.color(x) > t.color(p)) fail("(b) trivalent " + std::to_string(x) + " exceeds its parent's color");
  }
  // (c)
  for (int y : t.trivalents()) {
    if (t.color(y) >= n) continue;
    const Tuple& first = t.label(t.leftmost_leaf(y));
    for (int u = y; u < t.end(y); ++u) {
      if (!t.is_leaf(u)) continue;
      for (int c = t.color(y); c < n; ++c)
        if (t.label(u)[c] != first[c])
          fail("(c) terminal " + std::to_string(u) + " differs in color " + std::to_string(c + 1) + " under trivalent " +
               std::to_string(y));
    }
  }
  DerivedLabels d = derived_labels(t);
  // (d)
  for (int y : t.trivalents())
    if (!leq(d.omega[t.right(y)], d.omega[t.left(y)])) fail("(d) left-weight not proper at " + std::to_string(y));
  // (e)
  for (int u : t.leaves()) {
    const Tuple& nu = d.nu[u];
    if (std::any_of(nu.begin(), nu.end(), [](int v) { return v < 0; }) || is_zero(nu))
      fail("(e) splitting label of terminal " + std::to_string(u) + " is not > 0");
    else if (!leq(nu, t.label(u)))
      fail("(e) terminal " + std::to_string(u) + " label below its splitting label");
  }
  // (f)
  for (int y : t.trivalents()) {
    const int c = t.color(y) - 1;
    if (d.nu[y][c] != 1) continue;
    const int want = d.omega[y][c] - 1;
    for (int x = t.right(y); x < t.end(t.right(y)); ++x)
      if (d.omega[x][c] != want) fail("(f) left-weight condition fails below " + std::to_string(y));
  }
  if (!r.ok) return r;
  // (g)
  for (int u : t.leaves()) r.N = checked_add(r.N, binom_tuple(t.label(u), d.nu[u]));
  return r;
}

bool is_leading(const MacaulayTree& t, int x, int level) {
  if (x <= 0) return false;
  if (t.is_trivalent(x) && t.color(x) > level) return false;
  int p = t.parent(x);
  return p == 0 || t.color(p) > level;
}

std::vector<int> leading_vertices(const MacaulayTree& t, int level) {
  std::vector<int> out;
  for (int x = 1; x < t.size(); ++x)
    if (is_leading(t, x, level)) out.push_back(x);
  return out;
}

namespace {

bool same_subtree(const MacaulayTree& t, int x, int y) {
  const int len = t.end(x) - x;
  if (t.end(y) - y != len) return false;
  for (int i = 0; i < len; ++i) {
    const TreeNode& p = t.node(x + i);
    const TreeNode& q = t.node(y + i);
    if (p.kind != q.kind || p.color != q.color || p.label != q.label) return false;
    if (p.kind == NodeKind::Trivalent && (p.left - (x + i) != q.left - (y + i) || p.right - (x + i) != q.right - (y + i)))
      return false;
  }
  return true;
}

bool is_cloning(const MacaulayTree& t, int y) {
  if (!t.is_trivalent(y)) return false;
  const int l = t.left(y), r = t.right(y), level = t.color(y) - 1;
  return is_leading(t, l, level) && is_leading(t, r, level) && same_subtree(t, l, r);
}

}  // namespace

std::optional<int> find_cloning_vertex(const MacaulayTree& t) {
  for (int y : t.trivalents())
    if (is_cloning(t, y)) return y;
  return std::nullopt;
}

bool is_condensed(const MacaulayTree& t) { return !find_cloning_vertex(t).has_value(); }

MacaulayTree condensation(const MacaulayTree& t, const CondenseOptions& opts) {
  MacaulayTree cur = t;
  std::mt19937 rng(opts.shuffle_seed.value_or(0));
  while (true) {
    std::vector<int> cands;
    for (int y : cur.trivalents())
      if (is_cloning(cur, y)) cands.push_back(y);
    if (cands.empty()) return cur;
    int y = cands.front();
    if (opts.shuffle_seed) y = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    std::vector<TreeNode> raw = cur.nodes();
    const int l = raw[y].left, c = raw[y].color - 1, p = raw[y].parent;
    if (!opts.literal)
      for (int u = l; u < cur.end(l); ++u)
        if (raw[u].kind == NodeKind::Terminal) ++raw[u].label[c];
    if (raw[p].left == y)
      raw[p].left = l;
    else
      raw[p].right = l;
    cur = MacaulayTree(cur.type(), raw);
  }
}

Count partial_diff(const MacaulayTree& t, const Tuple& x) {
  require_same_length(t.type(), x, "partial_diff");
  DerivedLabels d = derived_labels(t);
  Count s = 0;
  for (int u : t.leaves()) s = checked_add(s, binom_tuple(t.label(u), add(d.nu[u], x)));
  return s;
}

Count represented_number(const MacaulayTree& t) { return partial_diff(t, Tuple(t.n(), 0)); }

std::vector<Vertex> psi(const MacaulayTree& t, const DerivedLabels& d, int x) {
  std::vector<Vertex> out;
  std::vector<int> path = t.path_to(x);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int v = path[i];
    if (t.is_trivalent(v) && t.right(v) == path[i + 1]) out.push_back({d.omega[v][t.color(v) - 1], t.color(v)});
  }
  return out;
}

ColoredComplex realize(const MacaulayTree& t) {
  DerivedLabels d = derived_labels(t);
  ColoredComplex probe = ColoredComplex::from_masks(t.type(), d.weight, {});
  std::vector<Mask> gens;
  for (int u : t.leaves()) {
    Mask base = probe.mask_of(psi(t, d, u));
    std::vector<Mask> parts{base};
    for (int c = 1; c <= t.n(); ++c) {
      std::vector<Mask> next;
      for (const Subset& s : k_subsets(t.label(u)[c - 1], d.nu[u][c - 1])) {
        Mask m = 0;
        for (int r : s) m |= probe.vertex_mask({r, c});
        for (Mask g : parts) next.push_back(g | m);
      }
      parts = std::move(next);
    }
    gens.insert(gens.end(), parts.begin(), parts.end());
  }
  return ColoredComplex::from_masks(t.type(), d.weight, gens);
}

std::string to_dot(const MacaulayTree& t) {
  std::ostringstream os;
  os << "digraph MacaulayTree {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (int x = 0; x < t.size(); ++x) {
    os << "  n" << x;
    if (x == 0)
      os << " [shape=plaintext, label=\"" << to_string(t.type()) << "\"]";
    else if (t.is_trivalent(x))
      os << " [xlabel=\"" << t.color(x) << "\"]";
    else
      os << " [shape=plaintext, label=\"" << to_string(t.label(x)) << "\"]";
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
