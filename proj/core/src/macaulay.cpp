#include "flagrep/macaulay.hpp"

#include <algorithm>

namespace flagrep {

Signature signature(const MacaulayTree& t, const DerivedLabels& d, int x, int color) {
  if (x < 1 || x >= t.size()) throw DomainError("signature: vertex out of range");
  if (color < 1 || color > t.n()) throw DomainError("signature: color out of range");
  const int c = color - 1;
  Signature s;
  s.color = color;
  for (const Vertex& v : psi(t, d, x))
    if (v.color == color) s.psi.push_back(v.rank);
  std::sort(s.psi.begin(), s.psi.end());
  std::vector<int> rel = t.right_relatives(x);
  int k = 0;
  while (true) {
    int y = rel[k++];
    s.psi_hat.push_back(d.omega[y][c]);
    if (t.is_leaf(y) || t.color(y) != color) break;
  }
  // A chain that uses up color t ends at a vertex with no color-t entries left.
  if (d.nu[rel[k - 1]][c] == 0) s.psi_hat.pop_back();
  std::sort(s.psi_hat.begin(), s.psi_hat.end());
  const int fill = t.type()[c] - static_cast<int>(s.psi.size()) - static_cast<int>(s.psi_hat.size());
  const int below = d.omega[rel[k - 1]][c] - 1;
  if (fill < 0 || fill > below) throw StructureError("signature: malformed tree at vertex " + std::to_string(x));
  s.xi_hat = colex_largest(below, fill);
  s.xi = s.psi;
  s.xi.insert(s.xi.end(), s.psi_hat.begin(), s.psi_hat.end());
  s.xi.insert(s.xi.end(), s.xi_hat.begin(), s.xi_hat.end());
  std::sort(s.xi.begin(), s.xi.end());
  if (std::adjacent_find(s.xi.begin(), s.xi.end()) != s.xi.end())
    throw StructureError("signature: overlapping parts at vertex " + std::to_string(x));
  return s;
}

Signature signature(const MacaulayTree& t, int x, int color) { return signature(t, derived_labels(t), x, color); }

namespace {

bool colex_leq(const Subset& a, const Subset& b) { return !colex_less(b, a); }

void check_zeta_args(const MacaulayTree& t, const DerivedLabels& d, int i, int j, int x) {
  if (j < 0 || i <= j || i > t.n()) throw DomainError("zeta: need 0 <= j < i <= n");
  if (!is_leading(t, x, j)) throw DomainError("zeta: vertex is not leading at the given level");
  if (t.type()[i - 1] - d.nu[x][i - 1] <= 0) throw DomainError("zeta: entry i of a - nu(x) is not positive");
}

}  // namespace

ZetaResult zeta(const MacaulayTree& t, const DerivedLabels& d, int i, int j, int x) {
  check_zeta_args(t, d, i, j, x);
  std::vector<int> path = t.path_to(x);
  int q = -1;
  for (int p = static_cast<int>(path.size()) - 2; p >= 1; --p) {
    int v = path[p];
    if (t.is_trivalent(v) && t.color(v) == i && t.right(v) == path[p + 1]) {
      q = v;
      break;
    }
  }
  if (q < 0) throw DomainError("zeta: no right-branching ancestor of color i");
  int yk = -1;
  for (int y : t.right_relatives(t.left(q))) {
    yk = y;
    if (t.is_leaf(y) || t.color(y) != i) break;
  }
  if (t.is_leaf(yk)) return {true, yk};
  int s = t.color(yk);
  int y = yk;
  while (s > j) {
    const Subset target = signature(t, d, x, s).xi;
    int found = -1;
    for (int u = y; u < t.end(y); ++u) {
      if (!is_leading(t, u, s - 1)) continue;
      if (colex_leq(target, signature(t, d, u, s).xi)) {
        found = u;
        break;
      }
    }
    if (found < 0) return {false, -1};
    y = found;
    s = t.is_leaf(y) ? j : t.color(y);
  }
  return {true, y};
}

ZetaResult zeta(const MacaulayTree& t, int i, int j, int x) { return zeta(t, derived_labels(t), i, j, x); }

namespace {

ZetaResult zeta_rec(const MacaulayTree& t, const DerivedLabels& d, int i, int j, int x) {
  if (i == j + 1) {
    std::vector<int> lead = leading_vertices(t, j);
    auto it = std::find(lead.begin(), lead.end(), x);
    if (it == lead.end() || it == lead.begin()) return {false, -1};
    return {true, *(it - 1)};
  }
  int xt = x;
  while (xt > 0 && !is_leading(t, xt, j + 1)) xt = t.parent(xt);
  if (xt <= 0) return {false, -1};
  ZetaResult yt = zeta_rec(t, d, i, j + 1, xt);
  if (!yt.defined) return yt;
  const Subset target = signature(t, d, x, j + 1).xi;
  for (int z = yt.node; z < t.end(yt.node); ++z)
    if (is_leading(t, z, j) && colex_leq(target, signature(t, d, z, j + 1).xi)) return {true, z};
  return {false, -1};
}

}  // namespace

ZetaResult zeta_recursive(const MacaulayTree& t, int i, int j, int x) {
  for (int v : t.type())
    if (v <= 0) throw DomainError("zeta_recursive: needs a positive type");
  DerivedLabels d = derived_labels(t);
  check_zeta_args(t, d, i, j, x);
  return zeta_rec(t, d, i, j, x);
}

CheckReport is_compressed_like(const MacaulayTree& t) {
  CheckReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
  };
  DerivedLabels d = derived_labels(t);
  for (int y : t.trivalents()) {
    const int tc = t.color(y), c = tc - 1;
    // (i)
    for (int x = t.parent(y); x > 0; x = t.parent(x)) {
      if (!t.is_trivalent(x) || t.color(x) != tc || !t.in_subtree(y, t.left(x))) continue;
      std::vector<int> chain{t.right(y)};
      for (int v = y; v != x; v = t.parent(v)) chain.push_back(v);
      std::reverse(chain.begin(), chain.end());  // x_1, ..., x_l
      for (std::size_t k = 0; k < chain.size(); ++k)
        if (d.omega[chain[k]][c] != d.omega[x][c] - static_cast<int>(k + 1)) {
          fail("(i) omega chain breaks between " + std::to_string(x) + " and " + std::to_string(y));
          break;
        }
    }
    // (ii)
    int yk = -1;
    for (int v : t.right_relatives(t.left(y))) {
      yk = v;
      if (t.is_leaf(v) || t.color(v) != tc) break;
    }
    for (int c2 = 0; c2 < t.n(); ++c2)
      if (c2 != c && d.omega[yk][c2] < d.omega[t.right(y)][c2])
        fail("(ii) color " + std::to_string(c2 + 1) + " bound fails at " + std::to_string(y));
  }
  return r;
}

CheckReport is_compatible(const MacaulayTree& t) {
  if (!is_compressed_like(t)) throw StructureError("is_compatible: tree is not compressed-like");
  CheckReport r;
  DerivedLabels d = derived_labels(t);
  const Tuple& a = t.type();
  for (int lvl = t.n() - 1; lvl >= 1; --lvl) {
    if (a[lvl - 1] == 0) continue;
    for (int x : leading_vertices(t, lvl)) {
      for (int i = lvl + 1; i <= t.n(); ++i) {
        if (a[i - 1] - d.nu[x][i - 1] <= 0) continue;
        ZetaResult z = zeta(t, d, i, lvl, x);
        std::string where = "(" + std::to_string(i) + "," + std::to_string(lvl) + ") at " + std::to_string(x);
        if (!z.defined) {
          r.ok = false;
          r.failures.push_back("zeta undefined for " + where);
        } else if (!colex_leq(signature(t, d, x, lvl).xi, signature(t, d, z.node, lvl).xi)) {
          r.ok = false;
          r.failures.push_back("signature order fails for " + where);
        }
      }
    }
  }
  return r;
}

MacaulayTree twin(const MacaulayTree& t, const Tuple& a_prime) {
  require_same_length(t.type(), a_prime, "twin");
  if (is_zero(a_prime) || !leq(a_prime, t.type()) ||
      std::any_of(a_prime.begin(), a_prime.end(), [](int v) { return v < 0; }))
    throw DomainError("twin: need 0 < a' <= a");
  const Tuple shift = sub(t.type(), a_prime);
  DerivedLabels d = derived_labels(t);
  auto in_s = [&](int x) { return lt(shift, d.nu[x]); };
  std::vector<TreeNode> raw = t.nodes();
  raw[0].label = a_prime;
  std::vector<int> s0;
  for (int y : t.trivalents()) {
    if (!in_s(y)) continue;
    if (!in_s(t.right(y))) s0.push_back(y);
  }
  std::sort(s0.rbegin(), s0.rend());
  for (int z : s0) {
    const int child = raw[z].left, c = raw[z].color - 1;
    for (int u = t.left(z); u < t.end(t.left(z)); ++u)
      if (raw[u].kind == NodeKind::Terminal) ++raw[u].label[c];
    const int p = raw[z].parent;
    if (raw[p].left == z)
      raw[p].left = child;
    else
      raw[p].right = child;
    raw[child].parent = p;
  }
  MacaulayTree out(a_prime, raw);
  if (represented_number(out) != partial_diff(t, sub(a_prime, t.type())))
    throw StructureError("twin: result does not represent the expected derivative");
  return out;
}

namespace {

void append_shifted(std::vector<TreeNode>& out, const MacaulayTree& t, int x, int parent, int extra) {
  const int id = static_cast<int>(out.size());
  TreeNode node = t.node(x);
  node.parent = parent;
  if (node.kind == NodeKind::Terminal) {
    node.label.push_back(extra);
    node.left = node.right = -1;
    out.push_back(std::move(node));
    return;
  }
  out.push_back(std::move(node));
  out[id].left = static_cast<int>(out.size());
  append_shifted(out, t, t.left(x), id, extra);
  out[id].right = static_cast<int>(out.size());
  append_shifted(out, t, t.right(x), id, extra);
}

}  // namespace

MacaulayTree wedge(const MacaulayTree& alpha, const MacaulayTree& alpha_prime) {
  const Tuple& ap = alpha_prime.type();
  require_same_length(alpha.type(), ap, "wedge");
  if (!leq(ap, alpha.type())) throw DomainError("wedge: type of alpha' must be <= type of alpha");
  MacaulayTree tw = condensation(twin(alpha, ap));
  Tuple root_label = ap;
  root_label.push_back(2);
  std::vector<TreeNode> raw(2);
  raw[0].kind = NodeKind::Root;
  raw[0].label = root_label;
  raw[0].left = 1;
  raw[1].kind = NodeKind::Trivalent;
  raw[1].parent = 0;
  raw[1].color = alpha.n() + 1;
  raw[1].left = 2;
  append_shifted(raw, alpha_prime, 1, 1, 2);
  raw[1].right = static_cast<int>(raw.size());
  append_shifted(raw, tw, 1, 1, 1);
  return MacaulayTree(root_label, raw);
}

bool is_generalized_rep(const MacaulayTree& t) {
  if (!validate(t).ok || !is_condensed(t)) return false;
  if (!is_compressed_like(t)) return false;
  return is_compatible(t).ok;
}

bool preceq(const GeneralizedRep& alpha, const GeneralizedRep& alpha_prime) {
  if (alpha.is_trivial()) return true;
  if (alpha_prime.is_trivial()) return false;
  return preceq(*alpha.tree, *alpha_prime.tree);
}

bool preceq(const MacaulayTree& alpha, const MacaulayTree& alpha_prime) {
  require_same_length(alpha.type(), alpha_prime.type(), "preceq");
  if (!leq(alpha_prime.type(), alpha.type())) throw DomainError("preceq: incomparable types");
  MacaulayTree w = wedge(alpha, alpha_prime);
  if (!is_compressed_like(w)) return false;
  return is_compatible(w).ok;
}

bool preceq_by_realization(const MacaulayTree& alpha, const MacaulayTree& alpha_prime) {
  require_same_length(alpha.type(), alpha_prime.type(), "preceq_by_realization");
  if (!leq(alpha_prime.type(), alpha.type())) throw DomainError("preceq_by_realization: incomparable types");
  MacaulayTree tw = condensation(twin(alpha, alpha_prime.type()));
  ColoredComplex small = realize(tw);
  ColoredComplex big = realize(alpha_prime);
  if (!leq(small.lambda(), big.lambda())) return false;
  for (Mask f : small.facets())
    if (!big.contains(big.mask_of(small.vertices_of(f)))) return false;
  return true;
}

}  // namespace flagrep
