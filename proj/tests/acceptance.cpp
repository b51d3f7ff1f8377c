// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "flagrep/characterization.hpp"
#include "flagrep/macaulay.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"
#include "flagrep/structure.hpp"
#include "json.hpp"

using namespace flagrep;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

json load(const std::string& name) { return json::parse(fixtures::load(name)); }

MacaulayTree tree_of(const json& j) { return tree_from_json(j.dump()); }

std::vector<Tuple> leaf_labels(const MacaulayTree& t) {
  std::vector<Tuple> out;
  for (int u : t.leaves()) out.push_back(t.label(u));
  return out;
}

// 1. All generalized 1_3-representations of 5 against the printed figure.
Outcome fig7() {
  Outcome o;
  json e = load("fig7");
  json trees = e.at("trees");
  for (const json& fix : e.at("errata")) {
    json& t = trees[fix.at("tree").get<std::size_t>()];
    MacaulayTree printed = tree_of(t);
    for (json& nd : t.at("nodes"))
      if (nd.at("id") == fix.at("node")) nd["label"] = fix.at("corrected");
    MacaulayTree fixed = tree_of(t);
    o.expect(!validate(printed).ok, "printed erratum tree should fail validation");
    o.expect(compact_ranks(realize(printed)).facets() == compact_ranks(realize(fixed)).facets(),
             "erratum changes the realization");
  }
  std::multiset<std::vector<Tuple>> want, got;
  for (const json& t : trees) want.insert(leaf_labels(tree_of(t)));
  std::vector<MacaulayTree> reps = enumerate_reps({1, 1, 1}, 5);
  for (const MacaulayTree& t : reps) got.insert(leaf_labels(t));
  o.expect(reps.size() == 24, "expected 24 representations, got " + std::to_string(reps.size()));
  o.expect(want == got, "leaf-label multisets differ");
  o.detail = o.ok ? "24 trees, leaf sequences match" : o.detail;
  return o;
}

FineVector flag_vector(const std::vector<std::vector<Count>>& m, Count top) {
  FineVector f({1, 1, 1});
  f.set({0, 0, 0}, 1);
  f.set({1, 1, 1}, top);
  f.set({1, 1, 0}, m[0][0]);
  f.set({1, 0, 1}, m[0][1]);
  f.set({0, 1, 1}, m[0][2]);
  f.set({1, 0, 0}, m[1][0]);
  f.set({0, 1, 0}, m[1][1]);
  f.set({0, 0, 1}, m[1][2]);
  return f;
}

// Largest matrix [f12 f13 f23; f1 f2 f3] over color permutations with f12 >= f13 >= f23.
std::vector<std::vector<Count>> normalize(const FineVector& f) {
  std::vector<int> p{0, 1, 2};
  std::vector<std::vector<Count>> best;
  do {
    auto at = [&](std::initializer_list<int> s) {
      Tuple b(3, 0);
      for (int i : s) b[p[i]] = 1;
      return f.at(b);
    };
    std::vector<std::vector<Count>> m{{at({0, 1}), at({0, 2}), at({1, 2})}, {at({0}), at({1}), at({2})}};
    if (m[0][0] >= m[0][1] && m[0][1] >= m[0][2] && (best.empty() || m > best)) best = m;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// 2. Every flag f-vector with f_[3] = 5 that the CM check accepts, up to color permutation.
Outcome flag_tables() {
  Outcome o;
  json e = load("example-flag-tables");
  const Count top = e.at("top").get<Count>();
  std::set<std::vector<std::vector<Count>>> want;
  for (const json& m : e.at("matrices")) want.insert(m.get<std::vector<std::vector<Count>>>());
  std::set<std::vector<std::vector<Count>>> found;
  long tried = 0;
  // in a pure complex every vertex and edge lies in a facet, so all entries are at most f_[3]
  std::vector<Count> v(6, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == v.size()) {
      std::vector<std::vector<Count>> m{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
      ++tried;
      FineVector f = flag_vector(m, top);
      if (check_flag_f_cm(3, f).feasible) found.insert(normalize(f));
      return;
    }
    for (v[i] = 1; v[i] <= top; ++v[i]) rec(i + 1);
  };
  rec(0);
  o.expect(found == want, "feasible set has " + std::to_string(found.size()) + " classes, expected " +
                              std::to_string(want.size()));
  FineVector rejected = fine_vector_from_json(e.at("rejected").dump(), Tuple{1, 1, 1});
  o.expect(!check_flag_f_cm(3, rejected).feasible, "F accepted");
  if (o.ok) o.detail = std::to_string(tried) + " arrays, " + std::to_string(found.size()) + " classes, F rejected";
  return o;
}

// 3. Shedding tree of Sigma.
Outcome fig2() {
  Outcome o;
  json e = load("fig2");
  SheddingTree s = shedding_tree(complex_from_json(e.dump()));
  MacaulayTree want = tree_of(e.at("tree"));
  o.expect(s.shape.nodes() == want.nodes(), "tree differs node-for-node");
  json splits = json::array();
  for (const Vertex& v : s.splits) splits.push_back({v.rank, v.color});
  o.expect(splits == e.at("splits"), "split vertices differ");
  const std::vector<std::pair<Tuple, Count>> f{{{1, 1}, 8}, {{1, 0}, 3}, {{0, 1}, 4}};
  for (const auto& [b, v] : f) o.expect(fine_f_from_tree(s, b) == v, "fine f at " + to_string(b));
  if (o.ok) o.detail = "tree, splits and (8,3,4) match";
  return o;
}

// 4. The compressed 2-complex with 6 facets.
Outcome fig1() {
  Outcome o;
  json e = load("fig1");
  ColoredComplex c = complex_from_json(e.dump());
  MacaulayTree t = induced_macaulay_tree(shedding_tree(c));
  o.expect(t == tree_of(e.at("tree")), "induced tree differs");
  DerivedLabels d = derived_labels(t);
  std::vector<std::pair<Count, int>> leaves;
  for (int u : t.leaves()) leaves.emplace_back(t.label(u)[0], d.nu[u][0]);
  o.expect(leaves == classic_macaulay_rep(6, 3), "leaf/nu data differ from the classic representation");
  ColoredComplex r = realize(t);
  std::set<Mask> edges, vertices;
  for (Mask f : r.facets())
    for (Mask g = f; g; g = (g - 1) & f) {
      if (popcount(g) == 2) edges.insert(g);
      if (popcount(g) == 1) vertices.insert(g);
    }
  o.expect(partial_diff(t, {-1}) == 9 && edges.size() == 9, "edge count");
  o.expect(partial_diff(t, {-2}) == 5 && vertices.size() == 5, "vertex count");
  if (o.ok) o.detail = "tree, 6 = C(4,3)+C(2,2)+C(1,1), 9 edges, 5 vertices";
  return o;
}

// 5. Condensation, twin and wedge against the stored trees.
Outcome errata() {
  Outcome o;
  json c = load("condensation");
  MacaulayTree un = tree_of(c.at("uncondensed"));
  MacaulayTree cd = condensation(un);
  o.expect(cd == tree_of(c.at("condensed")), "condensation differs");
  o.expect(represented_number(cd) == 27 && represented_number(un) == 27, "N not preserved");
  json w = load("wedge");
  MacaulayTree alpha = tree_of(w.at("alpha"));
  MacaulayTree alpha_prime = tree_of(w.at("alpha_prime"));
  o.expect(twin(alpha, w.at("a_prime").get<Tuple>()) == tree_of(w.at("twin")), "twin differs");
  o.expect(wedge(alpha, alpha_prime) == tree_of(w.at("wedge")), "wedge differs");
  if (o.ok) o.detail = "condensation (N=27), twin, wedge match";
  return o;
}

// 6. Brute-force achievable sets against the characterization.
Outcome oracle_equivalence() {
  Outcome o;
  const std::vector<std::pair<Tuple, Tuple>> cases{
      {{1, 1}, {2, 2}}, {{1, 1}, {3, 2}}, {{1, 1, 1}, {2, 2, 1}}, {{2}, {4}}, {{2, 1}, {3, 2}}};
  std::string sizes;
  for (const auto& [a, lambda] : cases) {
    CrossReport r = cross_validate(a, lambda);
    o.expect(r.match, "mismatch at a=" + to_string(a) + " lambda=" + to_string(lambda));
    sizes += (sizes.empty() ? "" : ",") + std::to_string(r.achievable);
  }
  if (o.ok) o.detail = "sizes " + sizes;
  return o;
}

// 7. Representations of N against compressed complexes with N facets.
Outcome bijection() {
  Outcome o;
  long total = 0;
  for (const Tuple& a : std::vector<Tuple>{{1, 1}, {2, 1}, {1, 1, 1}})
    for (int N = 1; N <= 6; ++N) {
      std::vector<MacaulayTree> reps = enumerate_reps(a, N);
      std::vector<ColoredComplex> census = compressed_census(a, N);
      o.expect(reps.size() == census.size(),
               "a=" + to_string(a) + " N=" + std::to_string(N) + ": " + std::to_string(reps.size()) + " reps vs " +
                   std::to_string(census.size()) + " complexes");
      for (const MacaulayTree& t : reps)
        o.expect(induced_macaulay_tree(shedding_tree(realize(t))) == t, "shed(realize(t)) != t");
      for (const ColoredComplex& c : census)
        o.expect(realize(induced_macaulay_tree(shedding_tree(c))) == compact_ranks(c), "realize(shed(C)) != C");
      total += static_cast<long>(reps.size());
    }
  if (o.ok) o.detail = std::to_string(total) + " representations, round trips exact";
  return o;
}

// Iterated Kruskal-Katona bound, written independently of the library.
Count kk_shadow(Count N, int k) {
  Count s = 0;
  for (int i = k; i >= 1 && N > 0; --i) {
    Count n = i;
    while (binom(n + 1, i) <= N) ++n;
    N -= binom(n, i);
    s += binom(n, i - 1);
  }
  return s;
}

// 8. n = 1 feasibility against Kruskal-Katona.
Outcome kruskal_katona() {
  Outcome o;
  const int M = 35;
  long total = 0, feasible = 0;
  for (int d = 1; d <= 4; ++d) {
    std::vector<Count> f(d + 1, 0);
    f[0] = 1;
    std::function<void(int)> rec = [&](int k) {
      if (k > d) {
        FineVector v({d});
        for (int i = 0; i <= d; ++i) v.set({i}, f[i]);
        bool kk = true;
        for (int i = 2; i <= d; ++i) {
          if (f[i] > 0 && (f[i - 1] == 0 || kk_shadow(f[i], i) > f[i - 1])) kk = false;
        }
        bool ours = check_fine_f_colored({d}, v).feasible;
        ++total;
        feasible += ours;
        o.expect(ours == kk, "disagreement at d=" + std::to_string(d));
        return;
      }
      for (Count x = (k == 1 ? 1 : 0); x <= M; ++x) {
        f[k] = x;
        rec(k + 1);
      }
    };
    rec(1);
  }
  if (o.ok) o.detail = std::to_string(total) + " vectors, " + std::to_string(feasible) + " feasible, 0 mismatches";
  return o;
}

// 9. Pure + color-shifted + balanced => a-Macaulay decomposable => vertex-decomposable.
Outcome structural() {
  Outcome o;
  // maximal universes per type within the oracle's 24-face cap
  const std::vector<std::pair<Tuple, Tuple>> range{
      {{2}, {6}},       {{3}, {4}},          {{1, 1}, {4, 4}},    {{1, 1}, {5, 3}},    {{2, 1}, {3, 2}},
      {{2, 1}, {4, 1}}, {{1, 2}, {2, 3}},    {{3, 1}, {3, 2}},    {{2, 2}, {2, 2}},    {{1, 1, 1}, {2, 2, 1}},
      {{1, 1, 1}, {3, 2, 1}}};
  long checked = 0;
  OracleFilter f;
  f.pure = f.balanced = f.color_shifted = true;
  for (const auto& [a, lambda] : range)
    for (const ColoredComplex& c : enumerate_complexes(a, lambda, f)) {
      ++checked;
      o.expect(is_macaulay_decomposable(c, a).ok, "not Macaulay decomposable: a=" + to_string(a));
      o.expect(is_vertex_decomposable(c).ok, "not vertex-decomposable: a=" + to_string(a));
    }
  // the second implication on arbitrary pure balanced complexes
  long md = 0;
  OracleFilter g;
  g.pure = g.balanced = g.up_to_iso = true;
  for (const auto& [a, lambda] : std::vector<std::pair<Tuple, Tuple>>{{{1, 1}, {3, 3}}, {{2}, {5}}, {{2, 1}, {3, 2}}})
    for (const ColoredComplex& c : enumerate_complexes(a, lambda, g))
      if (is_macaulay_decomposable(c, a).ok) {
        ++md;
        o.expect(is_vertex_decomposable(c).ok, "Macaulay decomposable but not vertex-decomposable");
      }
  if (o.ok)
    o.detail = std::to_string(checked) + " shifted complexes, " + std::to_string(md) + " decomposable classes, 0 counterexamples";
  return o;
}

// Compression score and divisor closure, computed from scratch.
Count score(const ColoredMulticomplex& m) {
  Count s = 0;
  for (const Monomial& p : m.monomials())
    for (int c = 1; c <= m.n(); ++c) {
      const int lo = m.first_var(c), k = m.vars_per_color()[c - 1];
      std::vector<int> pc(p.begin() + lo, p.begin() + lo + k), caps(m.caps().begin() + lo, m.caps().begin() + lo + k);
      int deg = 0;
      for (int x : pc) deg += x;
      std::vector<int> q(k, 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k) {
          if (left != 0) return;
          // q <=lex pc: compare from the largest index
          for (int j = k - 1; j >= 0; --j)
            if (q[j] != pc[j]) {
              if (q[j] < pc[j]) ++s;
              return;
            }
          ++s;
          return;
        }
        for (q[i] = 0; q[i] <= std::min(left, caps[i]); ++q[i]) rec(i + 1, left - q[i]);
      };
      rec(0, deg);
    }
  return s;
}

bool divisor_closed(const ColoredMulticomplex& m) {
  std::set<Monomial> all(m.monomials().begin(), m.monomials().end());
  if (!all.count(Monomial(m.num_vars(), 0))) return false;
  for (const Monomial& p : all)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0) {
        Monomial q = p;
        --q[i];
        if (!all.count(q)) return false;
      }
  return true;
}

std::map<Tuple, Count> degree_counts(const ColoredMulticomplex& m) {
  std::map<Tuple, Count> out;
  for (const Monomial& p : m.monomials()) ++out[m.multidegree(p)];
  return out;
}

// 10. C_t on random multicomplexes.
Outcome compression() {
  Outcome o;
  std::mt19937 rng(20240);
  long steps = 0, moves = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    ColoredMulticomplex m = fixtures::random_multicomplex(rng);
    const Count before = score(m);
    for (int t = 1; t <= m.n(); ++t) {
      ColoredMulticomplex c = compress_t(m, t);
      ++steps;
      o.expect(degree_counts(c) == degree_counts(m), "fine f-vector changed");
      o.expect(divisor_closed(c), "result not divisor-closed");
      if (c == m) {
        o.expect(score(c) == before, "score moved at a fixpoint");
      } else {
        ++moves;
        o.expect(score(c) < before, "score did not decrease");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(steps) + " applications, " + std::to_string(moves) + " strict decreases";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "representations of 5, 1_3", 5, fig7},
      {2, "flag f-vector table", 30, flag_tables},
      {3, "shedding tree of Sigma", 1, fig2},
      {4, "6 facets on 5 vertices", 1, fig1},
      {5, "condensation, twin, wedge", 1, errata},
      {6, "oracle equivalence", 600, oracle_equivalence},
      {7, "bijection", 600, bijection},
      {8, "Kruskal-Katona regression", 60, kruskal_katona},
      {9, "structural implications", 300, structural},
      {10, "compression invariance", 60, compression},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.budget) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    failed += !o.ok;
    std::printf("criterion %2d %-28s %s  %8.3f s / %5.0f s  %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", s, c.budget,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
