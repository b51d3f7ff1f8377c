#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "flagrep/combinatorics.hpp"

namespace flagrep {

using Mask = std::uint64_t;
constexpr int kMaxVertices = 64;

struct Vertex {
  int rank = 0;
  int color = 0;  // 1-based
  auto operator<=>(const Vertex&) const = default;
};

struct ColoringError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FaceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int popcount(Mask m) { return __builtin_popcountll(m); }

// Faces are bitmasks over the universe ([lambda_1]_1, ..., [lambda_n]_n);
// vertex (r, c) sits at bit offset(c) + r - 1.
class ColoredComplex {
 public:
  ColoredComplex() = default;

  static ColoredComplex from_facets(Tuple a, Tuple lambda, const std::vector<std::vector<Vertex>>& facets);
  // Downward closure of the generators.
  static ColoredComplex from_masks(Tuple a, Tuple lambda, const std::vector<Mask>& generators);
  // Caller guarantees the family is already closed under subsets.
  static ColoredComplex from_closed_faces(Tuple a, Tuple lambda, std::vector<Mask> faces);

  int n() const { return static_cast<int>(a_.size()); }
  const Tuple& type() const { return a_; }
  const Tuple& lambda() const { return lambda_; }
  int universe_size() const { return total(lambda_); }

  int bit(Vertex v) const;
  Vertex vertex(int bit) const;
  Mask vertex_mask(Vertex v) const { return Mask{1} << bit(v); }
  Mask mask_of(const std::vector<Vertex>& vs) const;
  std::vector<Vertex> vertices_of(Mask m) const;
  // All universe bits of a color.
  Mask color_mask(int color) const;
  // Vertices that are faces.
  Mask vertex_set() const { return vertex_set_; }
  Mask present(int color) const { return vertex_set_ & color_mask(color); }
  Tuple present_counts() const;
  Tuple color_counts(Mask face) const;

  // Sorted, always contains 0 (the empty face).
  const std::vector<Mask>& faces() const { return faces_; }
  const std::vector<Mask>& facets() const { return facets_; }
  bool contains(Mask face) const;
  int dim() const;
  bool is_pure() const;
  bool is_balanced() const { return dim() == total(a_) - 1; }

  bool operator==(const ColoredComplex& o) const {
    return a_ == o.a_ && lambda_ == o.lambda_ && faces_ == o.faces_;
  }

 private:
  ColoredComplex(Tuple a, Tuple lambda, std::vector<Mask> faces);
  void index();

  Tuple a_;
  Tuple lambda_;
  std::vector<int> offset_;
  std::vector<Mask> faces_{0};
  std::vector<Mask> facets_{0};
  Mask vertex_set_ = 0;
};

class FineVector {
 public:
  FineVector() = default;
  explicit FineVector(Tuple a);

  const Tuple& type() const { return a_; }
  // Zero outside 0 <= b <= a.
  Count at(const Tuple& b) const;
  void set(const Tuple& b, Count value);
  // Entries in box(a) order.
  const std::vector<Count>& values() const { return values_; }
  std::vector<Tuple> keys() const { return box(a_); }

  bool operator==(const FineVector& o) const = default;
  auto operator<=>(const FineVector& o) const = default;

 private:
  std::size_t index(const Tuple& b) const;
  Tuple a_;
  std::vector<Count> values_;
};

enum class RestrictionKind { Deletion, Link, Skeleton };

ColoredComplex deletion(const ColoredComplex& c, Mask sigma);
ColoredComplex link(const ColoredComplex& c, Mask sigma);
ColoredComplex skeleton(const ColoredComplex& c, int k);
ColoredComplex face_restriction(const ColoredComplex& c, RestrictionKind kind, Mask sigma_or_dim);
ColoredComplex join(const ColoredComplex& c1, const ColoredComplex& c2);

FineVector fine_f_vector(const ColoredComplex& c);
FineVector fine_h_vector(const FineVector& f);
FineVector fine_f_from_h(const FineVector& h);
std::vector<Count> collapsed(const FineVector& v);

enum class RibKind { Rib, Ribcage };
ColoredComplex build_rib(const Tuple& lambda, const Tuple& a, RibKind kind = RibKind::Rib);

bool is_t_factorizable(const ColoredComplex& c, int t, Mask s_t, int x_t);
// Against the complex's own vertex partition and type.
bool is_t_factorizable(const ColoredComplex& c, int t);

struct Normalized {
  ColoredComplex complex;
  std::vector<int> colors;  // kept original colors, 1-based
};
// Drops colors without vertices.
Normalized overline(const ColoredComplex& c);
// Relabels ranks within each color to 1..k preserving order; lambda becomes the present counts.
ColoredComplex compact_ranks(const ColoredComplex& c);

}  // namespace flagrep
