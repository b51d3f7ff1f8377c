#include "flagrep/complex.hpp"

#include <algorithm>

namespace flagrep {

namespace {

std::vector<Mask> down_closure(const std::vector<Mask>& gens) {
  std::vector<Mask> out{0};
  for (Mask g : gens) {
    // enumerate all submasks
    for (Mask s = g;; s = (s - 1) & g) {
      out.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ColoredComplex::ColoredComplex(Tuple a, Tuple lambda, std::vector<Mask> faces)
    : a_(std::move(a)), lambda_(std::move(lambda)), faces_(std::move(faces)) {
  index();
}

void ColoredComplex::index() {
  require_same_length(a_, lambda_, "ColoredComplex");
  if (a_.empty()) throw DimensionError("ColoredComplex: need n >= 1");
  for (int v : a_)
    if (v < 0) throw DomainError("ColoredComplex: negative type entry");
  for (int v : lambda_)
    if (v < 0) throw PartitionError("ColoredComplex: negative partition size");
  if (total(lambda_) > kMaxVertices) throw CapacityError("ColoredComplex: more than 64 vertices");
  offset_.assign(a_.size(), 0);
  for (std::size_t i = 1; i < a_.size(); ++i) offset_[i] = offset_[i - 1] + lambda_[i - 1];
  vertex_set_ = 0;
  for (Mask f : faces_)
    if (popcount(f) == 1) vertex_set_ |= f;
  facets_.clear();
  for (Mask f : faces_) {
    bool maximal = true;
    for (Mask rest = vertex_set_ & ~f; rest; rest &= rest - 1) {
      if (contains(f | (rest & -rest))) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
}

ColoredComplex ColoredComplex::from_masks(Tuple a, Tuple lambda, const std::vector<Mask>& generators) {
  ColoredComplex c(std::move(a), std::move(lambda), {0});
  Mask universe = c.universe_size() == 64 ? ~Mask{0} : ((Mask{1} << c.universe_size()) - 1);
  for (Mask g : generators) {
    if (g & ~universe) throw PartitionError("from_masks: vertex outside partition");
    Tuple counts = c.color_counts(g);
    for (int i = 0; i < c.n(); ++i)
      if (counts[i] > c.a_[i]) throw ColoringError("from_masks: face violates color bound");
  }
  c.faces_ = down_closure(generators);
  c.index();
  return c;
}

ColoredComplex ColoredComplex::from_closed_faces(Tuple a, Tuple lambda, std::vector<Mask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty() || faces.front() != 0) faces.insert(faces.begin(), 0);
  return ColoredComplex(std::move(a), std::move(lambda), std::move(faces));
}

ColoredComplex ColoredComplex::from_facets(Tuple a, Tuple lambda, const std::vector<std::vector<Vertex>>& facets) {
  ColoredComplex probe(a, lambda, {0});
  std::vector<Mask> gens;
  for (const auto& f : facets) {
    for (const Vertex& v : f) {
      if (v.color < 1 || v.color > probe.n()) throw PartitionError("from_facets: color out of range");
      if (v.rank < 1 || v.rank > probe.lambda_[v.color - 1]) throw PartitionError("from_facets: rank exceeds lambda");
    }
    gens.push_back(probe.mask_of(f));
  }
  return from_masks(std::move(a), std::move(lambda), gens);
}

int ColoredComplex::bit(Vertex v) const {
  if (v.color < 1 || v.color > n() || v.rank < 1 || v.rank > lambda_[v.color - 1])
    throw PartitionError("vertex outside partition");
  return offset_[v.color - 1] + v.rank - 1;
}

Vertex ColoredComplex::vertex(int b) const {
  for (int i = n() - 1; i >= 0; --i)
    if (b >= offset_[i] && lambda_[i] > 0) return {b - offset_[i] + 1, i + 1};
  throw PartitionError("bit outside partition");
}

Mask ColoredComplex::mask_of(const std::vector<Vertex>& vs) const {
  Mask m = 0;
  for (const Vertex& v : vs) m |= vertex_mask(v);
  return m;
}

std::vector<Vertex> ColoredComplex::vertices_of(Mask m) const {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(vertex(__builtin_ctzll(m)));
  return out;
}

Mask ColoredComplex::color_mask(int color) const {
  int len = lambda_[color - 1];
  if (len == 0) return 0;
  Mask block = len == 64 ? ~Mask{0} : ((Mask{1} << len) - 1);
  return block << offset_[color - 1];
}

Tuple ColoredComplex::present_counts() const {
  Tuple r(n());
  for (int i = 0; i < n(); ++i) r[i] = popcount(present(i + 1));
  return r;
}

Tuple ColoredComplex::color_counts(Mask face) const {
  Tuple r(n());
  for (int i = 0; i < n(); ++i) r[i] = popcount(face & color_mask(i + 1));
  return r;
}

bool ColoredComplex::contains(Mask face) const { return std::binary_search(faces_.begin(), faces_.end(), face); }

int ColoredComplex::dim() const {
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool ColoredComplex::is_pure() const {
  int d = dim();
  return std::all_of(facets_.begin(), facets_.end(), [&](Mask f) { return popcount(f) - 1 == d; });
}

FineVector::FineVector(Tuple a) : a_(std::move(a)) {
  std::size_t size = 1;
  for (int v : a_) {
    if (v < 0) throw DomainError("FineVector: negative type");
    size *= static_cast<std::size_t>(v + 1);
  }
  values_.assign(size, 0);
}

std::size_t FineVector::index(const Tuple& b) const {
  std::size_t idx = 0, radix = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    idx += radix * static_cast<std::size_t>(b[i]);
    radix *= static_cast<std::size_t>(a_[i] + 1);
  }
  return idx;
}

Count FineVector::at(const Tuple& b) const {
  require_same_length(a_, b, "FineVector::at");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 0 || b[i] > a_[i]) return 0;
  return values_[index(b)];
}

void FineVector::set(const Tuple& b, Count value) {
  require_same_length(a_, b, "FineVector::set");
  if (!leq(b, a_) || std::any_of(b.begin(), b.end(), [](int v) { return v < 0; }))
    throw DomainError("FineVector::set: key outside 0 <= b <= a");
  values_[index(b)] = value;
}

ColoredComplex deletion(const ColoredComplex& c, Mask sigma) {
  if (!c.contains(sigma)) throw FaceError("deletion: not a face");
  std::vector<Mask> faces;
  for (Mask f : c.faces())
    if ((f & sigma) != sigma) faces.push_back(f);
  return ColoredComplex::from_closed_faces(c.type(), c.lambda(), std::move(faces));
}

ColoredComplex link(const ColoredComplex& c, Mask sigma) {
  if (!c.contains(sigma)) throw FaceError("link: not a face");
  std::vector<Mask> gens;
  for (Mask f : c.facets())
    if ((f & sigma) == sigma) gens.push_back(f & ~sigma);
  Tuple a = sub(c.type(), c.color_counts(sigma));
  return ColoredComplex::from_masks(a, c.lambda(), gens);
}

ColoredComplex skeleton(const ColoredComplex& c, int k) {
  std::vector<Mask> faces;
  for (Mask f : c.faces())
    if (popcount(f) <= k + 1) faces.push_back(f);
  return ColoredComplex::from_closed_faces(c.type(), c.lambda(), std::move(faces));
}

ColoredComplex face_restriction(const ColoredComplex& c, RestrictionKind kind, Mask arg) {
  switch (kind) {
    case RestrictionKind::Deletion:
      return deletion(c, arg);
    case RestrictionKind::Link:
      return link(c, arg);
    case RestrictionKind::Skeleton:
      return skeleton(c, static_cast<int>(arg));
  }
  throw DomainError("face_restriction: unknown kind");
}

ColoredComplex join(const ColoredComplex& c1, const ColoredComplex& c2) {
  Tuple a = c1.type(), lambda = c1.lambda();
  a.insert(a.end(), c2.type().begin(), c2.type().end());
  lambda.insert(lambda.end(), c2.lambda().begin(), c2.lambda().end());
  if (total(lambda) > kMaxVertices) throw CapacityError("join: more than 64 vertices");
  const int shift = c1.universe_size();
  std::vector<Mask> gens;
  for (Mask f : c1.facets())
    for (Mask g : c2.facets()) gens.push_back(f | (g << shift));
  return ColoredComplex::from_masks(a, lambda, gens);
}

FineVector fine_f_vector(const ColoredComplex& c) {
  FineVector f(c.type());
  for (Mask face : c.faces()) {
    Tuple b = c.color_counts(face);
    f.set(b, f.at(b) + 1);
  }
  return f;
}

FineVector fine_h_vector(const FineVector& f) {
  const Tuple& a = f.type();
  FineVector h(a);
  for (const Tuple& b : box(a)) {
    Count s = 0;
    for (const Tuple& c : box(b)) {
      Count term = f.at(c);
      for (std::size_t i = 0; i < a.size(); ++i) {
        term = checked_mul(term, binom(a[i] - c[i], b[i] - c[i]));
        if ((b[i] - c[i]) % 2) term = -term;
      }
      s = checked_add(s, term);
    }
    h.set(b, s);
  }
  return h;
}

FineVector fine_f_from_h(const FineVector& h) {
  const Tuple& a = h.type();
  FineVector f(a);
  for (const Tuple& b : box(a)) {
    Count s = 0;
    for (const Tuple& c : box(b)) {
      Count term = h.at(c);
      for (std::size_t i = 0; i < a.size(); ++i) term = checked_mul(term, binom(a[i] - c[i], b[i] - c[i]));
      s = checked_add(s, term);
    }
    f.set(b, s);
  }
  return f;
}

std::vector<Count> collapsed(const FineVector& v) {
  std::vector<Count> out(total(v.type()) + 1, 0);
  for (const Tuple& b : v.keys()) out[total(b)] = checked_add(out[total(b)], v.at(b));
  return out;
}

ColoredComplex build_rib(const Tuple& lambda, const Tuple& a, RibKind kind) {
  require_same_length(lambda, a, "build_rib");
  Tuple lam = lambda;
  if (kind == RibKind::Ribcage) lam = add(a, Tuple(a.size(), 1));
  if (!leq(a, lam)) throw CapacityError("build_rib: lambda < a");
  ColoredComplex probe = ColoredComplex::from_masks(a, lam, {});
  std::vector<Mask> gens{0};
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
    std::vector<Mask> next;
    for (const Subset& s : k_subsets(lam[i - 1], a[i - 1])) {
      Mask m = 0;
      for (int r : s) m |= probe.vertex_mask({r, i});
      for (Mask g : gens) next.push_back(g | m);
    }
    gens = std::move(next);
  }
  return ColoredComplex::from_masks(a, lam, gens);
}

bool is_t_factorizable(const ColoredComplex& c, int t, Mask s_t, int x_t) {
  if (x_t == 0) return true;
  std::vector<Subset> subsets = k_subsets(popcount(s_t), x_t);
  if (subsets.empty()) return false;
  std::vector<int> bits;
  for (Mask m = s_t; m; m &= m - 1) bits.push_back(__builtin_ctzll(m));
  (void)t;
  for (Mask f : c.facets()) {
    if (popcount(f & s_t) != x_t) return false;
    Mask rest = f & ~s_t;
    for (const Subset& s : subsets) {
      Mask m = rest;
      for (int r : s) m |= Mask{1} << bits[r - 1];
      if (!c.contains(m)) return false;
    }
  }
  return true;
}

bool is_t_factorizable(const ColoredComplex& c, int t) {
  if (t < 1 || t > c.n()) throw DomainError("is_t_factorizable: color out of range");
  return is_t_factorizable(c, t, c.present(t), c.type()[t - 1]);
}

Normalized overline(const ColoredComplex& c) {
  Normalized out;
  Tuple a, lambda;
  for (int i = 1; i <= c.n(); ++i) {
    if (c.present(i) == 0) continue;
    out.colors.push_back(i);
    a.push_back(c.type()[i - 1]);
    lambda.push_back(c.lambda()[i - 1]);
  }
  if (out.colors.empty()) throw StructureError("overline: complex has no vertices");
  ColoredComplex probe = ColoredComplex::from_masks(a, lambda, {});
  std::vector<Mask> gens;
  for (Mask f : c.facets()) {
    Mask m = 0;
    for (const Vertex& v : c.vertices_of(f)) {
      int k = static_cast<int>(std::find(out.colors.begin(), out.colors.end(), v.color) - out.colors.begin());
      m |= probe.vertex_mask({v.rank, k + 1});
    }
    gens.push_back(m);
  }
  out.complex = ColoredComplex::from_masks(a, lambda, gens);
  return out;
}

ColoredComplex compact_ranks(const ColoredComplex& c) {
  Tuple lambda = c.present_counts();
  ColoredComplex probe = ColoredComplex::from_masks(c.type(), lambda, {});
  // new rank of each present vertex
  std::vector<int> rank_of(c.universe_size(), 0);
  for (int i = 1; i <= c.n(); ++i) {
    int r = 0;
    for (Mask m = c.present(i); m; m &= m - 1) rank_of[__builtin_ctzll(m)] = ++r;
  }
  std::vector<Mask> gens;
  for (Mask f : c.facets()) {
    Mask m = 0;
    for (Mask x = f; x; x &= x - 1) {
      int b = __builtin_ctzll(x);
      m |= probe.vertex_mask({rank_of[b], c.vertex(b).color});
    }
    gens.push_back(m);
  }
  return ColoredComplex::from_masks(c.type(), lambda, gens);
}

}  // namespace flagrep
