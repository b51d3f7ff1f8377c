#include "flagrep/multicomplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagrep {

ColoredMulticomplex::ColoredMulticomplex(std::vector<int> vars_per_color, std::vector<int> caps,
                                         const std::vector<Monomial>& monomials, Tuple type)
    : vars_(std::move(vars_per_color)), caps_(std::move(caps)), type_(std::move(type)) {
  if (vars_.empty()) throw DimensionError("multicomplex: need at least one color");
  int nv = 0;
  for (int v : vars_) {
    if (v < 1) throw DomainError("multicomplex: each color needs a variable");
    nv += v;
  }
  if (static_cast<int>(caps_.size()) != nv) throw DimensionError("multicomplex: caps length mismatch");
  for (int c : caps_)
    if (c < 1 && c != kUnbounded) throw DomainError("multicomplex: caps must be positive or unbounded");
  if (!type_.empty() && static_cast<int>(type_.size()) != n()) throw DimensionError("multicomplex: type length");

  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  auto push = [&](const Monomial& m) {
    if (seen.insert(m).second) stack.push_back(m);
  };
  push(Monomial(nv, 0));
  for (const Monomial& m : monomials) {
    if (static_cast<int>(m.size()) != nv) throw DimensionError("multicomplex: monomial length mismatch");
    for (int i = 0; i < nv; ++i)
      if (m[i] < 0 || (caps_[i] != kUnbounded && m[i] > caps_[i]))
        throw DomainError("multicomplex: exponent outside cap");
    if (!type_.empty() && !leq(multidegree(m), type_)) throw ColoringError("multicomplex: multidegree exceeds type");
    push(m);
  }
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (int i = 0; i < nv; ++i) {
      if (m[i] == 0) continue;
      --m[i];
      push(m);
      ++m[i];
    }
  }
  monomials_.assign(seen.begin(), seen.end());
}

bool ColoredMulticomplex::contains(const Monomial& m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

std::vector<Monomial> ColoredMulticomplex::maximal_monomials() const {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_) {
    bool maximal = true;
    Monomial up = m;
    for (int i = 0; i < num_vars() && maximal; ++i) {
      ++up[i];
      if (contains(up)) maximal = false;
      --up[i];
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

int ColoredMulticomplex::first_var(int color) const {
  int s = 0;
  for (int i = 1; i < color; ++i) s += vars_[i - 1];
  return s;
}

Tuple ColoredMulticomplex::multidegree(const Monomial& m) const {
  Tuple d(n(), 0);
  int v = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < vars_[i]; ++j) d[i] += m[v++];
  return d;
}

FineVector ColoredMulticomplex::fine_f_vector() const {
  Tuple a = type_;
  if (a.empty()) {
    a.assign(n(), 0);
    for (const Monomial& m : monomials_) {
      Tuple d = multidegree(m);
      for (int i = 0; i < n(); ++i) a[i] = std::max(a[i], d[i]);
    }
  }
  FineVector f(a);
  for (const Monomial& m : monomials_) {
    Tuple d = multidegree(m);
    f.set(d, f.at(d) + 1);
  }
  return f;
}

bool lex_less(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

std::vector<std::vector<int>> lex_degree_block(const std::vector<int>& caps, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(caps.size(), 0);
  // fill positions left to right with the remaining degree budget
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == caps.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    int cap = caps[i] == kUnbounded ? left : std::min(caps[i], left);
    for (int v = 0; v <= cap; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool is_divisor_closed(const std::vector<Monomial>& ms) {
  for (const Monomial& m : ms) {
    Monomial d = m;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      --d[i];
      if (!std::binary_search(ms.begin(), ms.end(), d)) return false;
      ++d[i];
    }
  }
  return true;
}

namespace {

std::vector<int> color_caps(const ColoredMulticomplex& m, int t) {
  int s = m.first_var(t);
  return {m.caps().begin() + s, m.caps().begin() + s + m.vars_per_color()[t - 1]};
}

void require_monotone_caps(const std::vector<int>& caps) {
  for (std::size_t i = 1; i < caps.size(); ++i) {
    bool prev_inf = caps[i - 1] == kUnbounded, cur_inf = caps[i] == kUnbounded;
    if (cur_inf && !prev_inf) throw PreconditionError("caps within a color must be non-increasing");
    if (!cur_inf && !prev_inf && caps[i] > caps[i - 1])
      throw PreconditionError("caps within a color must be non-increasing");
  }
}

}  // namespace

ColoredMulticomplex compress_t(const ColoredMulticomplex& m, int t) {
  if (t < 1 || t > m.n()) throw DomainError("compress_t: color out of range");
  const std::vector<int> caps = color_caps(m, t);
  require_monotone_caps(caps);
  const int s = m.first_var(t), len = static_cast<int>(caps.size());

  // fiber (color-t part zeroed) -> degree -> count
  std::map<Monomial, std::map<int, Count>> fibers;
  for (const Monomial& mono : m.monomials()) {
    Monomial fiber = mono;
    int d = 0;
    for (int i = s; i < s + len; ++i) {
      d += mono[i];
      fiber[i] = 0;
    }
    ++fibers[fiber][d];
  }
  std::map<int, std::vector<std::vector<int>>> blocks;
  std::vector<Monomial> out;
  for (const auto& [fiber, by_degree] : fibers) {
    for (const auto& [d, count] : by_degree) {
      auto it = blocks.find(d);
      if (it == blocks.end()) it = blocks.emplace(d, lex_degree_block(caps, d)).first;
      for (Count k = 0; k < count; ++k) {
        Monomial mono = fiber;
        std::copy(it->second[k].begin(), it->second[k].end(), mono.begin() + s);
        out.push_back(mono);
      }
    }
  }
  ColoredMulticomplex r(m.vars_per_color(), m.caps(), out, m.type());
  if (static_cast<std::size_t>(r.monomials().size()) != m.monomials().size())
    throw StructureError("compress_t: result is not divisor-closed");
  return r;
}

FixpointResult color_compress_fixpoint(const ColoredMulticomplex& m) {
  FixpointResult r{m, {}};
  for (int t = 1; t <= m.n(); ++t) require_monotone_caps(color_caps(m, t));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 1; t <= m.n(); ++t) {
      ColoredMulticomplex next = compress_t(r.result, t);
      if (!(next == r.result)) {
        r.result = std::move(next);
        r.colors.push_back(t);
        changed = true;
        break;
      }
    }
  }
  return r;
}

bool is_color_compressed_mc(const ColoredMulticomplex& m) {
  for (int t = 1; t <= m.n(); ++t)
    if (!(compress_t(m, t) == m)) return false;
  return true;
}

Count compression_score(const ColoredMulticomplex& m) {
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> blocks;
  Count score = 0;
  for (const Monomial& p : m.monomials()) {
    for (int t = 1; t <= m.n(); ++t) {
      int s = m.first_var(t), len = m.vars_per_color()[t - 1];
      std::vector<int> part(p.begin() + s, p.begin() + s + len);
      int d = total(part);
      auto key = std::make_pair(t, d);
      auto it = blocks.find(key);
      if (it == blocks.end()) it = blocks.emplace(key, lex_degree_block(color_caps(m, t), d)).first;
      auto pos = std::lower_bound(it->second.begin(), it->second.end(), part, lex_less);
      score = checked_add(score, static_cast<Count>(pos - it->second.begin()) + 1);
    }
  }
  return score;
}

ColoredMulticomplex from_complex(const ColoredComplex& c) {
  std::vector<int> vars(c.lambda().begin(), c.lambda().end());
  for (int v : vars)
    if (v < 1) throw DomainError("from_complex: empty color");
  std::vector<int> caps(c.universe_size(), 1);
  std::vector<Monomial> ms;
  for (Mask f : c.facets()) {
    Monomial m(c.universe_size(), 0);
    for (; f; f &= f - 1) m[__builtin_ctzll(f)] = 1;
    ms.push_back(m);
  }
  return ColoredMulticomplex(vars, caps, ms, c.type());
}

ColoredComplex to_complex(const ColoredMulticomplex& m, const Tuple& a) {
  Tuple lambda(m.vars_per_color().begin(), m.vars_per_color().end());
  std::vector<Mask> gens;
  for (const Monomial& mono : m.maximal_monomials()) {
    Mask f = 0;
    for (int i = 0; i < m.num_vars(); ++i) {
      if (mono[i] > 1) throw DomainError("to_complex: monomial is not squarefree");
      if (mono[i]) f |= Mask{1} << i;
    }
    gens.push_back(f);
  }
  return ColoredComplex::from_masks(a, lambda, gens);
}

}  // namespace flagrep
