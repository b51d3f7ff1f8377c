#include "flagrep/structure.hpp"

#include <algorithm>
#include <map>

namespace flagrep {

namespace {

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
  return out;
}

// Position (1-based) of each present vertex of color t, keyed by bit.
std::map<int, int> positions(const ColoredComplex& c, int t) {
  std::map<int, int> pos;
  int k = 0;
  for (int b : bits_of(c.present(t))) pos[b] = ++k;
  return pos;
}

Subset to_positions(Mask part, const std::map<int, int>& pos) {
  Subset s;
  for (int b : bits_of(part)) s.push_back(pos.at(b));
  return s;
}

using Fibers = std::map<std::pair<Mask, int>, std::vector<Count>>;

Fibers color_fibers(const ColoredComplex& c, int t) {
  const Mask vt = c.color_mask(t);
  const auto pos = positions(c, t);
  Fibers fibers;
  for (Mask f : c.faces()) {
    Mask part = f & vt;
    fibers[{f & ~vt, popcount(part)}].push_back(colex_rank(to_positions(part, pos)));
  }
  return fibers;
}

bool facet_in(const std::vector<Mask>& facets, Mask f) { return std::binary_search(facets.begin(), facets.end(), f); }

bool link_facets_avoid_deletion(const ColoredComplex& dl, const ColoredComplex& lk) {
  std::vector<Mask> dl_facets = dl.facets();
  std::sort(dl_facets.begin(), dl_facets.end());
  for (Mask g : lk.facets())
    if (facet_in(dl_facets, g)) return false;
  return true;
}

std::vector<Mask> sorted_facets(const ColoredComplex& c) {
  std::vector<Mask> f = c.facets();
  std::sort(f.begin(), f.end());
  return f;
}

std::shared_ptr<const DecompositionCertificate> base_certificate() {
  return std::make_shared<const DecompositionCertificate>();
}

class VdSearch {
 public:
  DecompositionResult run(const ColoredComplex& c) {
    auto key = sorted_facets(c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DecompositionResult r;
    if (c.facets().size() <= 1) {
      r = {true, base_certificate()};
    } else {
      for (int b : bits_of(c.vertex_set())) {
        Mask x = Mask{1} << b;
        ColoredComplex dl = deletion(c, x), lk = link(c, x);
        if (!link_facets_avoid_deletion(dl, lk)) continue;
        DecompositionResult d = run(dl);
        if (!d.ok) continue;
        DecompositionResult l = run(lk);
        if (!l.ok) continue;
        auto cert = std::make_shared<DecompositionCertificate>();
        cert->kind = DecompositionCertificate::Kind::Shed;
        cert->vertex = c.vertex(b);
        cert->deletion = d.certificate;
        cert->link = l.certificate;
        r = {true, cert};
        break;
      }
    }
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  std::map<std::vector<Mask>, DecompositionResult> memo_;
};

class MdSearch {
 public:
  DecompositionResult run(const ColoredComplex& c, const Tuple& a) {
    auto key = std::make_pair(sorted_facets(c), a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DecompositionResult r = search(c, a);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  DecompositionResult search(const ColoredComplex& c, const Tuple& a) {
    if (c.dim() != total(a) - 1) return {};
    if (is_rib_of_simplex(c, a)) return {true, base_certificate()};
    std::vector<int> order = bits_of(c.vertex_set());
    std::reverse(order.begin(), order.end());
    for (int b : order) {
      Mask x = Mask{1} << b;
      ColoredComplex dl = deletion(c, x), lk = link(c, x);
      if (!link_facets_avoid_deletion(dl, lk)) continue;
      DecompositionResult d = run(dl, a);
      if (!d.ok) continue;
      for (const Tuple& sub_a : link_types(a, lk.dim() + 1)) {
        DecompositionResult l = run(lk, sub_a);
        if (!l.ok) continue;
        auto cert = std::make_shared<DecompositionCertificate>();
        cert->kind = DecompositionCertificate::Kind::Shed;
        cert->vertex = c.vertex(b);
        cert->sub_a = sub_a;
        cert->deletion = d.certificate;
        cert->link = l.certificate;
        cert->non_covering = !covered_by(sub_a, a) || d.certificate->non_covering || l.certificate->non_covering;
        return {true, cert};
      }
    }
    return {};
  }

  // Covering types first, then the rest of the a' < a with the right size.
  static std::vector<Tuple> link_types(const Tuple& a, int size) {
    std::vector<Tuple> out;
    for (int i = static_cast<int>(a.size()); i >= 1; --i)
      if (a[i - 1] > 0 && total(a) - 1 == size) out.push_back(sub(a, delta(i, static_cast<int>(a.size()))));
    for (const Tuple& b : box(a))
      if (b != a && total(b) == size && !covered_by(b, a)) out.push_back(b);
    return out;
  }

  std::map<std::pair<std::vector<Mask>, Tuple>, DecompositionResult> memo_;
};

}  // namespace

bool is_color_shifted(const ColoredComplex& c) {
  for (Mask f : c.faces()) {
    for (int t = 1; t <= c.n(); ++t) {
      const Mask vt = c.present(t);
      for (int b : bits_of(f & vt)) {
        // every smaller present vertex of the same color not in f must swap in
        Mask below = vt & ((Mask{1} << b) - 1) & ~f;
        for (int b2 : bits_of(below))
          if (!c.contains((f & ~(Mask{1} << b)) | (Mask{1} << b2))) return false;
      }
    }
  }
  return true;
}

bool is_color_compressed(const ColoredComplex& c) {
  for (int t = 1; t <= c.n(); ++t) {
    for (auto& [key, ranks] : color_fibers(c, t)) {
      std::sort(ranks.begin(), ranks.end());
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] != static_cast<Count>(i)) return false;
    }
  }
  return true;
}

ColoredComplex color_compress(const ColoredComplex& c, int t) {
  if (t < 1 || t > c.n()) throw DomainError("color_compress: color out of range");
  std::vector<int> vt = bits_of(c.present(t));
  std::vector<Mask> faces;
  for (const auto& [key, ranks] : color_fibers(c, t)) {
    auto [rest, k] = key;
    for (const Subset& s : colex_initial_segment(static_cast<int>(vt.size()), k, static_cast<Count>(ranks.size()))) {
      Mask m = rest;
      for (int p : s) m |= Mask{1} << vt[p - 1];
      faces.push_back(m);
    }
  }
  ColoredComplex r = ColoredComplex::from_masks(c.type(), c.lambda(), faces);
  if (r.faces().size() != c.faces().size()) throw StructureError("color_compress: result is not a complex");
  return r;
}

DecompositionResult is_vertex_decomposable(const ColoredComplex& c) {
  VdSearch s;
  return s.run(c);
}

DecompositionResult is_macaulay_decomposable(const ColoredComplex& c, const Tuple& a) {
  for (int v : a)
    if (v < 0) throw DomainError("is_macaulay_decomposable: negative type");
  MdSearch s;
  return s.run(c, a);
}

bool is_rib_of_simplex(const ColoredComplex& c, const Tuple& a) {
  const int parts = static_cast<int>(a.size());
  const std::vector<Mask>& facets = c.facets();
  if (total(a) == 0) return c.faces().size() == 1;
  if (c.faces().size() == 1) return false;
  std::vector<int> verts = bits_of(c.vertex_set());
  std::vector<int> assign(verts.size(), -1);
  // counts[f][p] = vertices of facet f already placed in part p
  std::vector<std::vector<int>> counts(facets.size(), std::vector<int>(parts, 0));
  std::vector<int> part_size(parts, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == verts.size()) {
      for (const auto& fc : counts)
        for (int p = 0; p < parts; ++p)
          if (fc[p] != a[p]) return false;
      Count expected = 1;
      for (int p = 0; p < parts; ++p) expected = checked_mul(expected, binom(part_size[p], a[p]));
      return expected == static_cast<Count>(facets.size());
    }
    const Mask x = Mask{1} << verts[i];
    for (int p = 0; p < parts; ++p) {
      if (a[p] == 0) continue;
      bool ok = true;
      for (std::size_t f = 0; f < facets.size(); ++f)
        if ((facets[f] & x) && counts[f][p] + 1 > a[p]) ok = false;
      if (!ok) continue;
      for (std::size_t f = 0; f < facets.size(); ++f)
        if (facets[f] & x) ++counts[f][p];
      ++part_size[p];
      if (self(self, i + 1)) return true;
      --part_size[p];
      for (std::size_t f = 0; f < facets.size(); ++f)
        if (facets[f] & x) --counts[f][p];
    }
    return false;
  };
  return rec(rec, 0);
}

std::optional<Vertex> macaulay_shedding_vertex(const ColoredComplex& c, SplitPolicy policy) {
  if (!c.is_pure() || !c.is_balanced() || !is_color_shifted(c))
    throw StructureError("macaulay_shedding_vertex: need a pure color-shifted balanced complex");
  const Tuple lam = c.present_counts();
  const Tuple& a = c.type();
  if (binom_tuple(lam, a) == static_cast<Count>(c.facets().size())) return std::nullopt;
  std::vector<int> eligible;
  for (int i = 1; i <= c.n(); ++i)
    if (lam[i - 1] > a[i - 1]) eligible.push_back(i);
  if (eligible.empty()) return std::nullopt;
  int color = policy == SplitPolicy::HighestColor ? eligible.back() : eligible.front();
  Mask vt = c.present(color);
  return c.vertex(63 - __builtin_clzll(vt));
}

}  // namespace flagrep
