#include "flagrep/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace flagrep {

Count checked_add(Count x, Count y) {
  Count r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Count checked_mul(Count x, Count y) {
  Count r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Count binom(Count n, Count k) {
  if (n < 0) throw DomainError("binom: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (Count i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i
    Count g = std::gcd(r, i);
    Count num = (n - k + i) / (i / g);
    r = checked_mul(r / g, num);
  }
  return r;
}

Count binom_tuple(const Tuple& x, const Tuple& y) {
  require_same_length(x, y, "binom_tuple");
  Count r = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) throw DomainError("binom_tuple: negative entry");
    Count c = binom(x[i], y[i]);
    if (c == 0) return 0;
    r = checked_mul(r, c);
  }
  return r;
}

int total(const Tuple& x) {
  int s = 0;
  for (int v : x) s += v;
  return s;
}

Tuple delta(int color, int n) {
  if (color < 1 || color > n) throw DomainError("delta: color out of range");
  Tuple d(n, 0);
  d[color - 1] = 1;
  return d;
}

void require_same_length(const Tuple& x, const Tuple& y, const char* what) {
  if (x.size() != y.size())
    throw DimensionError(std::string(what) + ": length mismatch " + to_string(x) + " vs " + to_string(y));
}

Tuple add(const Tuple& x, const Tuple& y) {
  require_same_length(x, y, "add");
  Tuple r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Tuple sub(const Tuple& x, const Tuple& y) {
  require_same_length(x, y, "sub");
  Tuple r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

bool leq(const Tuple& x, const Tuple& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool lt(const Tuple& x, const Tuple& y) { return leq(x, y) && x != y; }

bool covered_by(const Tuple& x, const Tuple& y) { return leq(x, y) && total(y) == total(x) + 1; }

bool is_zero(const Tuple& x) {
  return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}

std::string to_string(const Tuple& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::vector<Tuple> box(const Tuple& a) {
  std::vector<Tuple> out;
  Tuple b(a.size(), 0);
  for (int v : a)
    if (v < 0) throw DomainError("box: negative entry");
  while (true) {
    out.push_back(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == a[i]) b[i++] = 0;
    if (i == b.size()) break;
    ++b[i];
  }
  return out;
}

bool colex_less(const Subset& x, const Subset& y) {
  // compare from the largest element down
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j)
    if (*i != *j) return *i < *j;
  return x.size() < y.size();
}

Count colex_rank(const Subset& x) {
  Count r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r = checked_add(r, binom(x[i] - 1, static_cast<Count>(i + 1)));
  return r;
}

std::vector<Subset> colex_initial_segment(int m, int k, Count count) {
  if (m < 0 || k < 0 || count < 0) throw DomainError("colex_initial_segment: negative argument");
  if (count > binom(m, k)) throw CapacityError("colex_initial_segment: count exceeds C(m,k)");
  std::vector<Subset> out;
  if (count == 0) return out;
  Subset s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  out.push_back(s);
  while (static_cast<Count>(out.size()) < count) {
    // colex successor: bump the first element that can move up
    int i = 0;
    while (i + 1 < k && s[i] + 1 == s[i + 1]) ++i;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j + 1;
    out.push_back(s);
  }
  return out;
}

Subset colex_largest(int m, int k) {
  if (k < 0 || k > m) throw DomainError("colex_largest: need 0 <= k <= m");
  Subset s;
  for (int v = m - k + 1; v <= m; ++v) s.push_back(v);
  return s;
}

std::vector<Subset> k_subsets(int m, int k) { return colex_initial_segment(m, k, binom(m, k)); }

namespace {

// C(n, k) <= limit, without overflowing on large n
bool binom_at_most(Count n, int k, Count limit) {
  __int128 c = 1;
  for (int j = 1; j <= k; ++j) {
    c = c * (n - k + j) / j;
    if (c > limit) return false;
  }
  return true;
}

}  // namespace

std::vector<std::pair<Count, int>> classic_macaulay_rep(Count N, int k) {
  if (N < 0 || k < 1) throw DomainError("classic_macaulay_rep: need N >= 0, k >= 1");
  std::vector<std::pair<Count, int>> rep;
  Count rest = N;
  for (int i = k; i >= 1 && rest > 0; --i) {
    // largest m with C(m, i) <= rest
    Count lo = i, hi = i + 1;
    while (binom_at_most(hi, i, rest)) hi = lo + 2 * (hi - lo);
    while (hi - lo > 1) {
      Count mid = lo + (hi - lo) / 2;
      (binom_at_most(mid, i, rest) ? lo : hi) = mid;
    }
    const Count m = lo;
    rep.emplace_back(m, i);
    rest -= binom(m, i);
  }
  return rep;
}

Count classic_shadow(Count N, int k) {
  Count s = 0;
  for (auto [m, i] : classic_macaulay_rep(N, k)) s = checked_add(s, binom(m, i - 1));
  return s;
}

bool is_permuted_refinement(const Tuple& a, const Tuple& b) {
  if (b.size() > a.size() || b.empty()) return false;
  if (total(a) != total(b)) return false;
  Tuple p(a);
  std::sort(p.begin(), p.end());
  const int m = static_cast<int>(b.size());
  const int n = static_cast<int>(p.size());
  // can p[pos..] be cut into blocks summing to b[t..]?
  std::function<bool(int, int)> fits = [&](int pos, int t) -> bool {
    if (t == m) return pos == n;
    int s = 0;
    for (int end = pos; end < n; ++end) {
      s += p[end];
      if (s == b[t] && fits(end + 1, t + 1)) return true;
      if (s > b[t]) break;
    }
    return false;
  };
  do {
    if (fits(0, 0)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Tuple kappa(const std::vector<int>& part_sizes, const Tuple& x) {
  if (part_sizes.size() != x.size()) throw DimensionError("kappa: length mismatch");
  Tuple r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0) throw DomainError("kappa: x must be positive");
    r[i] = part_sizes[i] != 0 ? part_sizes[i] : x[i];
  }
  return r;
}

}  // namespace flagrep
