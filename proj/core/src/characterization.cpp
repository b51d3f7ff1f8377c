#include "flagrep/characterization.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

namespace flagrep {

namespace {

struct Slot {
  int parent;
  bool is_left;
  Tuple nu;
  int max_color;
};

class RepSearch {
 public:
  RepSearch(Tuple a, Count N, Tuple fill, int jobs, int job)
      : a_(std::move(a)), n_(static_cast<int>(a_.size())), fill_(std::move(fill)), budget_(N), jobs_(jobs), job_(job) {}

  std::vector<MacaulayTree> run() {
    TreeNode root;
    root.kind = NodeKind::Root;
    root.label = a_;
    nodes_.push_back(root);
    nu_.push_back(a_);
    pending_.push_back({0, true, a_, n_});
    rec();
    return std::move(found_);
  }

 private:
  Tuple omega(int x) const {
    std::vector<int> chain;
    while (nodes_[x].kind != NodeKind::Terminal) {
      chain.push_back(nodes_[x].color);
      x = nodes_[x].left;
    }
    Tuple w = nodes_[x].label;
    for (int c : chain) ++w[c - 1];
    return w;
  }

  bool root_option_allowed() {
    if (static_cast<int>(nodes_.size()) != 1) return true;
    return root_option_++ % jobs_ == job_;
  }

  int attach(TreeNode nd, const Slot& s) {
    const int id = static_cast<int>(nodes_.size());
    nd.parent = s.parent;
    if (s.is_left)
      nodes_[s.parent].left = id;
    else
      nodes_[s.parent].right = id;
    nodes_.push_back(std::move(nd));
    nu_.push_back(s.nu);
    return id;
  }

  void detach(const Slot& s) {
    nodes_.pop_back();
    nu_.pop_back();
    if (s.is_left)
      nodes_[s.parent].left = -1;
    else
      nodes_[s.parent].right = -1;
  }

  // Ancestors of a new node under slot s, from r_1 down to the slot's parent.
  std::vector<int> ancestors(const Slot& s) const {
    std::vector<int> out;
    for (int v = s.parent; v > 0; v = nodes_[v].parent) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
  }

  void rec() {
    if (pending_.empty()) {
      if (budget_ == 0) finish();
      return;
    }
    if (budget_ < static_cast<Count>(pending_.size())) return;
    Slot s = pending_.back();
    pending_.pop_back();
    try_leaves(s);
    try_trivalents(s);
    pending_.push_back(std::move(s));
  }

  void try_trivalents(const Slot& s) {
    if (budget_ < static_cast<Count>(pending_.size()) + 2 || total(s.nu) < 2) return;
    for (int c = 1; c <= s.max_color; ++c) {
      if (s.nu[c - 1] < 1) continue;
      if (!root_option_allowed()) continue;
      TreeNode nd;
      nd.kind = NodeKind::Trivalent;
      nd.color = c;
      const int id = attach(nd, s);
      pending_.push_back({id, false, sub(s.nu, delta(c, n_)), c});
      pending_.push_back({id, true, s.nu, c});
      rec();
      pending_.pop_back();
      pending_.pop_back();
      detach(s);
    }
  }

  void try_leaves(const Slot& s) {
    const Count cap = budget_ - static_cast<Count>(pending_.size());
    if (cap < 1) return;
    const std::vector<int> anc = ancestors(s);
    // forced[j] > 0 pins coordinate j
    Tuple forced(n_, 0);
    auto pin = [&](int j, int v) {
      if (v < 1) return false;
      if (forced[j] && forced[j] != v) return false;
      forced[j] = v;
      return true;
    };
    for (int j = 0; j < n_; ++j) {
      if (a_[j] == 0 && !pin(j, fill_[j])) return;
      // (c): the topmost ancestor whose color is below j+1
      for (std::size_t k = 0; k < anc.size(); ++k) {
        if (nodes_[anc[k]].color >= j + 1) continue;
        bool leftmost = s.is_left;
        for (std::size_t m = k + 1; m < anc.size(); ++m)
          if (nodes_[anc[m - 1]].left != anc[m]) leftmost = false;
        if (!leftmost) {
          int l = anc[k];
          while (nodes_[l].kind != NodeKind::Terminal) l = nodes_[l].left;
          if (!pin(j, nodes_[l].label[j])) return;
        }
        break;
      }
      // (f): coordinates exhausted by a right turn
      if (a_[j] > 0 && s.nu[j] == 0) {
        int ystar = -1;
        for (int k = static_cast<int>(anc.size()) - 1; k >= 0; --k) {
          int p = anc[k];
          bool right_turn = (k + 1 < static_cast<int>(anc.size())) ? nodes_[p].right == anc[k + 1] : !s.is_left;
          if (right_turn && nodes_[p].color == j + 1 && nu_[p][j] == 1) {
            ystar = p;
            break;
          }
        }
        if (ystar < 0 || !pin(j, omega(ystar)[j] - 1)) return;
      }
      if (forced[j] && forced[j] < s.nu[j]) return;
    }
    Tuple label(n_, 0);
    label_coords(s, forced, label, 0, 1, cap);
  }

  void label_coords(const Slot& s, const Tuple& forced, Tuple& label, int j, Count prod, Count cap) {
    if (j == n_) {
      place_leaf(s, label, prod);
      return;
    }
    if (forced[j]) {
      Count b = binom(forced[j], s.nu[j]);
      if (b == 0 || prod * b > cap) return;
      label[j] = forced[j];
      label_coords(s, forced, label, j + 1, prod * b, cap);
      return;
    }
    for (int m = std::max(s.nu[j], 1);; ++m) {
      Count b = binom(m, s.nu[j]);
      if (prod * b > cap) break;
      label[j] = m;
      label_coords(s, forced, label, j + 1, prod * b, cap);
      if (s.nu[j] == 0) break;
    }
  }

  void place_leaf(const Slot& s, const Tuple& label, Count weight) {
    if (!root_option_allowed()) return;
    TreeNode nd;
    nd.kind = NodeKind::Terminal;
    nd.label = label;
    const int id = attach(nd, s);
    // (d) at the first right edge above the new leaf
    bool ok = true;
    int w = id;
    while (w > 1 && nodes_[nodes_[w].parent].left == w) w = nodes_[w].parent;
    if (w > 1) {
      int p = nodes_[w].parent;
      ok = leq(omega(w), omega(nodes_[p].left)) && compressed_like_at(p);
    }
    for (int v = id; ok && v > 1 && nodes_[nodes_[v].parent].right == v;) {
      v = nodes_[v].parent;
      ok = !cloning(v);
    }
    if (ok) {
      budget_ -= weight;
      rec();
      budget_ += weight;
    }
    detach(s);
  }

  // Both compressed-like conditions at y, once omega(y_right) is known.
  bool compressed_like_at(int y) const {
    const int tc = nodes_[y].color, c = tc - 1;
    const int yr = nodes_[y].right;
    std::vector<int> path{yr, y};
    for (int x = nodes_[y].parent; x > 0; x = nodes_[x].parent) {
      path.push_back(x);
      if (nodes_[x].kind != NodeKind::Trivalent || nodes_[x].color != tc) continue;
      if (!in_left_subtree(y, x)) continue;
      const int top = omega(x)[c];
      for (std::size_t k = path.size() - 1; k-- > 0;)
        if (omega(path[k])[c] != top - static_cast<int>(path.size() - 1 - k)) return false;
    }
    int yk = nodes_[y].left;
    while (nodes_[yk].kind == NodeKind::Trivalent && nodes_[yk].color == tc) yk = nodes_[yk].right;
    const Tuple wk = omega(yk), wr = omega(yr);
    for (int c2 = 0; c2 < n_; ++c2)
      if (c2 != c && wk[c2] < wr[c2]) return false;
    return true;
  }

  bool in_left_subtree(int y, int x) const {
    for (int v = y; v > 0; v = nodes_[v].parent)
      if (nodes_[v].parent == x) return nodes_[x].left == v;
    return false;
  }

  bool leading_below(int x, int color) const {
    return nodes_[x].kind == NodeKind::Terminal || nodes_[x].color < color;
  }

  bool same_shape(int x, int y) const {
    const TreeNode& p = nodes_[x];
    const TreeNode& q = nodes_[y];
    if (p.kind != q.kind || p.color != q.color || p.label != q.label) return false;
    if (p.kind != NodeKind::Trivalent) return true;
    return same_shape(p.left, q.left) && same_shape(p.right, q.right);
  }

  // y has both subtrees complete
  bool cloning(int y) const {
    const int l = nodes_[y].left, r = nodes_[y].right, tc = nodes_[y].color;
    return leading_below(l, tc) && leading_below(r, tc) && same_shape(l, r);
  }

  void finish() {
    MacaulayTree t(a_, nodes_);
    if (!validate(t).ok || !is_condensed(t) || !is_compressed_like(t)) return;
    if (!is_compatible(t)) return;
    found_.push_back(std::move(t));
  }

  Tuple a_;
  int n_;
  Tuple fill_;
  Count budget_;
  int jobs_, job_;
  long root_option_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<Tuple> nu_;
  std::vector<Slot> pending_;
  std::vector<MacaulayTree> found_;
};

bool has_negative(const Tuple& a) {
  return std::any_of(a.begin(), a.end(), [](int v) { return v < 0; });
}

// Candidate lists and preceq answers shared across feasibility checks.
class RepCache {
 public:
  struct Entry {
    long id;
    std::vector<GeneralizedRep> reps;
  };

  std::shared_ptr<const Entry> reps(const Tuple& b, Count value, const Tuple& fill) {
    Tuple key = b;
    key.push_back(static_cast<int>(std::min<Count>(value, INT_MAX)));
    // fill matters only where b vanishes
    for (std::size_t j = 0; j < b.size(); ++j) key.push_back(b[j] == 0 ? fill[j] : 0);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = reps_.find(key);
      if (it != reps_.end()) return it->second;
    }
    auto e = std::make_shared<Entry>();
    if (value == 0) {
      e->reps.push_back(GeneralizedRep::trivial(b));
    } else {
      EnumOptions eo;
      eo.zero_fill = fill;
      for (MacaulayTree& t : enumerate_reps(b, value, eo)) e->reps.push_back(GeneralizedRep::of(std::move(t)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (reps_.size() >= kMaxEntries) {
      reps_.clear();
      preceq_.clear();
    }
    e->id = next_id_++;
    return reps_.emplace(std::move(key), e).first->second;
  }

  bool preceq_cached(const Entry& hi, std::size_t khi, const Entry& lo, std::size_t klo) {
    auto key = std::make_tuple(hi.id, khi, lo.id, klo);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = preceq_.find(key);
      if (it != preceq_.end()) return it->second;
    }
    bool v = preceq(hi.reps[khi], lo.reps[klo]);
    std::lock_guard<std::mutex> lock(mu_);
    if (preceq_.size() >= kMaxPairs) preceq_.clear();
    preceq_.emplace(key, v);
    return v;
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 14;
  static constexpr std::size_t kMaxPairs = 1 << 20;
  std::mutex mu_;
  long next_id_ = 0;
  std::map<Tuple, std::shared_ptr<const Entry>> reps_;
  std::map<std::tuple<long, std::size_t, long, std::size_t>, bool> preceq_;
};

RepCache& rep_cache() {
  static RepCache cache;
  return cache;
}

Tuple indicator(int d, unsigned mask) {
  Tuple b(d, 0);
  for (int i = 0; i < d; ++i) b[i] = (mask >> i) & 1u;
  return b;
}

}  // namespace

bool canonical_less(const MacaulayTree& x, const MacaulayTree& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (int i = 0; i < x.size(); ++i) {
    const TreeNode& p = x.node(i);
    const TreeNode& q = y.node(i);
    auto kp = std::make_tuple(static_cast<int>(p.kind), p.color, p.left, p.label);
    auto kq = std::make_tuple(static_cast<int>(q.kind), q.color, q.left, q.label);
    if (kp != kq) return kp < kq;
  }
  return false;
}

namespace {

// For n = 1 the representation is unique: a right comb whose left leaves carry the classic expansion.
MacaulayTree classic_tree(int k, Count N) {
  std::vector<std::pair<Count, int>> rep = classic_macaulay_rep(N, k);
  TreeSpec t = leaf_spec({static_cast<int>(rep.back().first)});
  for (std::size_t i = rep.size() - 1; i-- > 0;) t = node_spec(1, leaf_spec({static_cast<int>(rep[i].first)}), t);
  return MacaulayTree({k}, t);
}

}  // namespace

std::vector<MacaulayTree> enumerate_reps(const Tuple& a, Count N, const EnumOptions& opts) {
  if (a.empty() || is_zero(a) || has_negative(a)) throw DomainError("enumerate_reps: need a nonzero type in N^n");
  if (N < 1) throw DomainError("enumerate_reps: need N >= 1");
  if (a.size() == 1) return {classic_tree(a[0], N)};
  if (total(a) > 8 || N > 10000) throw CapacityError("enumerate_reps: outside the supported range");
  Tuple fill = opts.zero_fill.value_or(Tuple(a.size(), 1));
  require_same_length(a, fill, "enumerate_reps");
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<MacaulayTree>> parts(jobs);
  if (jobs == 1) {
    parts[0] = RepSearch(a, N, fill, 1, 0).run();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j)
      threads.emplace_back([&, j] { parts[j] = RepSearch(a, N, fill, jobs, j).run(); });
    for (auto& th : threads) th.join();
  }
  std::vector<MacaulayTree> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FineVector fine_f_from_rep(const MacaulayTree& alpha) {
  FineVector f(alpha.type());
  for (const Tuple& b : box(alpha.type())) f.set(b, partial_diff(alpha, sub(b, alpha.type())));
  return f;
}

Feasibility check_pure_balanced_fine_f(const Tuple& a, const FineVector& f) {
  require_same_length(a, f.type(), "check_pure_balanced_fine_f");
  Feasibility r;
  const Count top = f.at(a);
  if (top <= 0) {
    r.reason = "f_a is not positive";
    return r;
  }
  for (const MacaulayTree& alpha : enumerate_reps(a, top)) {
    if (fine_f_from_rep(alpha) == f) {
      r.feasible = true;
      r.witnesses.emplace_back(a, GeneralizedRep::of(alpha));
      return r;
    }
  }
  r.reason = "no representation of f_a reproduces f";
  return r;
}

Feasibility check_fine_f_colored(const Tuple& a, const FineVector& f) {
  require_same_length(a, f.type(), "check_fine_f_colored");
  const int n = static_cast<int>(a.size());
  Feasibility r;
  std::vector<Tuple> keys = box(a);
  if (f.at(Tuple(n, 0)) != 1) {
    r.reason = "f_0 must be 1";
    return r;
  }
  Tuple fill(n, 1);
  for (int i = 1; i <= n; ++i) {
    if (a[i - 1] == 0) continue;
    Count v = f.at(delta(i, n));
    if (v <= 0) {
      r.reason = "f_delta_" + std::to_string(i) + " must be positive";
      return r;
    }
    if (v > 64) {
      r.reason = "too many vertices of color " + std::to_string(i);
      return r;
    }
    fill[i - 1] = static_cast<int>(v);
  }
  for (const Tuple& b : keys) {
    if (f.at(b) < 0) {
      r.reason = "negative entry at " + to_string(b);
      return r;
    }
    if (f.at(b) != 0) continue;
    for (const Tuple& c : keys)
      if (leq(b, c) && f.at(c) != 0) {
        r.reason = "f vanishes at " + to_string(b) + " but not at " + to_string(c);
        return r;
      }
  }
  // Descending |b|, the origin excluded.
  std::vector<Tuple> order;
  for (const Tuple& b : keys)
    if (!is_zero(b)) order.push_back(b);
  std::stable_sort(order.begin(), order.end(), [](const Tuple& x, const Tuple& y) { return total(x) > total(y); });
  std::map<Tuple, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  RepCache& cache = rep_cache();
  std::vector<std::shared_ptr<const RepCache::Entry>> cands(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    cands[i] = cache.reps(order[i], f.at(order[i]), fill);
    if (cands[i]->reps.empty()) {
      r.reason = "no representation of f_" + to_string(order[i]);
      return r;
    }
  }
  // covers[i]: positions of b'' with order[i] covered by b''
  std::vector<std::vector<int>> covers(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c = 1; c <= n; ++c) {
      Tuple up = add(order[i], delta(c, n));
      if (leq(up, a)) covers[i].push_back(pos.at(up));
    }
  std::vector<int> pick(order.size(), -1);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    for (int k = 0; k < static_cast<int>(cands[i]->reps.size()); ++k) {
      bool ok = true;
      for (int hi : covers[i])
        if (!cache.preceq_cached(*cands[hi], pick[hi], *cands[i], k)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick[i] = k;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) {
    r.reason = "no chain of representations";
    return r;
  }
  r.feasible = true;
  for (std::size_t i = 0; i < order.size(); ++i) r.witnesses.emplace_back(order[i], cands[i]->reps[pick[i]]);
  return r;
}

Feasibility check_flag_f_cm(int d, const FineVector& f) {
  if (d < 1) throw DomainError("check_flag_f_cm: need d >= 1");
  return check_pure_balanced_fine_f(Tuple(d, 1), f);
}

Feasibility check_flag_h_cm(int d, const FineVector& h) {
  if (d < 1) throw DomainError("check_flag_h_cm: need d >= 1");
  Feasibility r;
  if (h.at(Tuple(d, 0)) != 1) {
    r.reason = "h_empty must be 1";
    return r;
  }
  for (int i = 1; i <= d; ++i)
    if (h.at(delta(i, d)) <= 0) {
      r.reason = "h_" + std::to_string(i) + " must be positive";
      return r;
    }
  return check_fine_f_colored(Tuple(d, 1), h);
}

std::optional<FineVector> refine_collapsed_h(int d, const std::vector<Count>& collapsed) {
  if (d < 1 || d > 16) throw DomainError("refine_collapsed_h: need 1 <= d <= 16");
  if (static_cast<int>(collapsed.size()) != d + 1) throw DimensionError("refine_collapsed_h: need d + 1 entries");
  if (collapsed[0] != 1) return std::nullopt;
  std::vector<std::vector<unsigned>> layers(d + 1);
  for (unsigned m = 0; m < (1u << d); ++m) layers[__builtin_popcount(m)].push_back(m);
  FineVector h(Tuple(d, 1));
  h.set(Tuple(d, 0), 1);
  std::optional<FineVector> result;
  // distribute collapsed[k] over the k-subsets, singletons strictly positive
  auto rec = [&](auto&& self, int k, std::size_t idx, Count left) -> bool {
    if (k > d) {
      if (auto r = check_flag_h_cm(d, h); r.feasible) {
        result = h;
        return true;
      }
      return false;
    }
    const auto& layer = layers[k];
    const Count lo = k == 1 ? 1 : 0;
    if (idx + 1 == layer.size()) {
      if (left < lo) return false;
      h.set(indicator(d, layer[idx]), left);
      return self(self, k + 1, 0, k + 1 <= d ? collapsed[k + 1] : 0);
    }
    const Count reserve = lo * static_cast<Count>(layer.size() - idx - 1);
    for (Count v = lo; v + reserve <= left; ++v) {
      h.set(indicator(d, layer[idx]), v);
      if (self(self, k, idx + 1, left - v)) return true;
    }
    return false;
  };
  rec(rec, 1, 0, collapsed[1]);
  return result;
}

}  // namespace flagrep
