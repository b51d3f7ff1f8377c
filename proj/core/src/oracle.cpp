#include "flagrep/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "flagrep/characterization.hpp"
#include "flagrep/structure.hpp"

namespace flagrep {

std::string OracleFilter::key() const {
  std::string k;
  k += pure ? 'p' : '-';
  k += balanced ? 'b' : '-';
  k += color_shifted ? 's' : '-';
  k += color_compressed ? 'c' : '-';
  k += all_colors ? 'a' : '-';
  k += up_to_iso ? 'i' : '-';
  if (facets) k += "N" + std::to_string(*facets);
  return k;
}

namespace {

struct FaceUniverse {
  ColoredComplex probe;
  std::vector<Mask> faces;  // admissible nonempty faces, by size
  std::vector<std::vector<int>> boundary;  // indices of codimension-one faces
};

FaceUniverse admissible_faces(const Tuple& a, const Tuple& lambda) {
  require_same_length(a, lambda, "oracle");
  FaceUniverse u;
  u.probe = ColoredComplex::from_masks(a, lambda, {});
  const int m = total(lambda);
  if (m > 20) throw CapacityError("oracle: universe too large");
  for (Mask f = 1; f < (Mask{1} << m); ++f) {
    Tuple cc = u.probe.color_counts(f);
    if (leq(cc, a)) u.faces.push_back(f);
    if (u.faces.size() > 24) throw CapacityError("oracle: more than 24 admissible faces");
  }
  std::stable_sort(u.faces.begin(), u.faces.end(), [](Mask x, Mask y) { return popcount(x) < popcount(y); });
  std::map<Mask, int> index;
  for (std::size_t i = 0; i < u.faces.size(); ++i) index[u.faces[i]] = static_cast<int>(i);
  u.boundary.resize(u.faces.size());
  for (std::size_t i = 0; i < u.faces.size(); ++i) {
    Mask f = u.faces[i];
    if (popcount(f) < 2) continue;
    for (Mask r = f; r; r &= r - 1) u.boundary[i].push_back(index.at(f & ~(r & -r)));
  }
  return u;
}

bool passes(const ColoredComplex& c, const OracleFilter& flt) {
  if (flt.facets && c.facets().size() != *flt.facets) return false;
  if (flt.all_colors)
    for (int i = 1; i <= c.n(); ++i)
      if (c.present(i) == 0) return false;
  if (flt.pure && !c.is_pure()) return false;
  if (flt.balanced && !c.is_balanced()) return false;
  if (flt.color_shifted && !is_color_shifted(c)) return false;
  if (flt.color_compressed && !is_color_compressed(c)) return false;
  return true;
}

}  // namespace

void for_each_complex(const Tuple& a, const Tuple& lambda, const std::function<void(const ColoredComplex&)>& visit) {
  FaceUniverse u = admissible_faces(a, lambda);
  std::vector<char> in(u.faces.size(), 0);
  std::vector<Mask> chosen{0};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == u.faces.size()) {
      visit(ColoredComplex::from_closed_faces(a, lambda, chosen));
      return;
    }
    self(self, i + 1);
    for (int b : u.boundary[i])
      if (!in[b]) return;
    in[i] = 1;
    chosen.push_back(u.faces[i]);
    self(self, i + 1);
    chosen.pop_back();
    in[i] = 0;
  };
  rec(rec, 0);
}

ColoredComplex canonical_form(const ColoredComplex& c) {
  const int n = c.n();
  const Tuple& lam = c.lambda();
  std::vector<std::vector<int>> perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i].resize(lam[i]);
    std::iota(perm[i].begin(), perm[i].end(), 1);
  }
  std::vector<Mask> best;
  bool have = false;
  auto evaluate = [&] {
    std::vector<Mask> img;
    for (Mask f : c.facets()) {
      Mask m = 0;
      for (const Vertex& v : c.vertices_of(f)) m |= c.vertex_mask({perm[v.color - 1][v.rank - 1], v.color});
      img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    if (!have || img < best) {
      best = img;
      have = true;
    }
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      evaluate();
      return;
    }
    std::sort(perm[i].begin(), perm[i].end());
    do {
      self(self, i + 1);
    } while (std::next_permutation(perm[i].begin(), perm[i].end()));
  };
  rec(rec, 0);
  return ColoredComplex::from_masks(c.type(), c.lambda(), best);
}

std::vector<ColoredComplex> enumerate_complexes(const Tuple& a, const Tuple& lambda, const OracleFilter& filter) {
  std::vector<ColoredComplex> out;
  std::set<std::vector<Mask>> seen;
  for_each_complex(a, lambda, [&](const ColoredComplex& c) {
    if (!passes(c, filter)) return;
    if (filter.up_to_iso) {
      ColoredComplex k = canonical_form(c);
      if (!seen.insert(k.faces()).second) return;
      out.push_back(std::move(k));
    } else {
      out.push_back(c);
    }
  });
  return out;
}

std::set<FineVector> achievable_fine_f(const Tuple& a, const Tuple& lambda_max) {
  std::set<FineVector> out;
  OracleFilter flt;
  flt.all_colors = true;
  for_each_complex(a, lambda_max, [&](const ColoredComplex& c) {
    if (passes(c, flt)) out.insert(fine_f_vector(c));
  });
  return out;
}

std::vector<FineVector> candidate_arrays(const Tuple& a, const Tuple& lambda_max) {
  require_same_length(a, lambda_max, "candidate_arrays");
  const int n = static_cast<int>(a.size());
  std::vector<Tuple> keys = box(a);
  std::vector<FineVector> out;
  FineVector f(a);
  auto bound = [&](const Tuple& b) {
    Count p = 1;
    for (int i = 0; i < n; ++i) p = checked_mul(p, binom(f.at(delta(i + 1, n)), b[i]));
    return p;
  };
  // singletons first so the bounds of the rest are known
  std::vector<Tuple> order;
  for (const Tuple& b : keys)
    if (total(b) == 1) order.push_back(b);
  for (const Tuple& b : keys)
    if (total(b) > 1) order.push_back(b);
  f.set(Tuple(n, 0), 1);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      out.push_back(f);
      return;
    }
    const Tuple& b = order[i];
    Count lo = 0, hi = 0;
    if (total(b) == 1) {
      int c = static_cast<int>(std::find(b.begin(), b.end(), 1) - b.begin());
      lo = 1;
      hi = lambda_max[c];
    } else {
      hi = bound(b);
    }
    for (Count v = lo; v <= hi; ++v) {
      f.set(b, v);
      self(self, i + 1);
    }
    f.set(b, 0);
  };
  rec(rec, 0);
  return out;
}

CrossReport cross_validate(const Tuple& a, const Tuple& lambda_max) {
  CrossReport r;
  std::set<FineVector> achievable = achievable_fine_f(a, lambda_max);
  std::set<FineVector> feasible;
  for (const FineVector& f : candidate_arrays(a, lambda_max))
    if (check_fine_f_colored(a, f).feasible) feasible.insert(f);
  r.achievable = achievable.size();
  r.feasible = feasible.size();
  std::set_difference(achievable.begin(), achievable.end(), feasible.begin(), feasible.end(),
                      std::back_inserter(r.only_achievable));
  std::set_difference(feasible.begin(), feasible.end(), achievable.begin(), achievable.end(),
                      std::back_inserter(r.only_feasible));
  r.match = r.only_achievable.empty() && r.only_feasible.empty();
  return r;
}

std::vector<ColoredComplex> compressed_census(const Tuple& a, int N) {
  if (N < 1) throw DomainError("compressed_census: need N >= 1");
  const int n = static_cast<int>(a.size());
  for (int v : a)
    if (v < 1) throw DomainError("compressed_census: need a > 0");
  // rank tuples; a down-set grows by adding an element whose lower covers are present
  using Point = std::vector<int>;
  std::set<std::vector<Point>> level{{Point(n, 0)}};
  for (int size = 1; size < N; ++size) {
    std::set<std::vector<Point>> next;
    for (const auto& ds : level) {
      std::set<Point> have(ds.begin(), ds.end());
      for (const Point& p : ds)
        for (int i = 0; i < n; ++i) {
          Point q = p;
          ++q[i];
          if (have.count(q)) continue;
          bool ok = true;
          for (int j = 0; j < n && ok; ++j)
            if (q[j] > 0) {
              Point r = q;
              --r[j];
              ok = have.count(r) > 0;
            }
          if (!ok) continue;
          std::vector<Point> grown = ds;
          grown.push_back(q);
          std::sort(grown.begin(), grown.end());
          next.insert(std::move(grown));
        }
    }
    level = std::move(next);
  }
  Tuple lambda(n, 0);
  for (int i = 0; i < n; ++i) lambda[i] = a[i] + N - 1;
  if (total(lambda) > kMaxVertices) throw CapacityError("compressed_census: too many vertices");
  std::vector<std::vector<Subset>> chains(n);
  for (int i = 0; i < n; ++i) chains[i] = colex_initial_segment(lambda[i], a[i], N);
  std::vector<ColoredComplex> out;
  for (const auto& ds : level) {
    std::vector<std::vector<Vertex>> facets;
    for (const Point& p : ds) {
      std::vector<Vertex> f;
      for (int i = 0; i < n; ++i)
        for (int r : chains[i][p[i]]) f.push_back({r, i + 1});
      facets.push_back(std::move(f));
    }
    ColoredComplex c = compact_ranks(ColoredComplex::from_facets(a, lambda, facets));
    if (c.is_pure() && c.is_balanced() && is_color_compressed(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace flagrep
