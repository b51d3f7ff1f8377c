#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagrep/tree.hpp"

namespace flagrep {

struct Signature {
  int color = 0;
  Subset psi;
  Subset psi_hat;
  Subset xi_hat;
  Subset xi;
};

Signature signature(const MacaulayTree& t, const DerivedLabels& d, int x, int color);
Signature signature(const MacaulayTree& t, int x, int color);

struct ZetaResult {
  bool defined = false;
  int node = -1;
};

// The descent algorithm. Throws DomainError when the preconditions on (i, j, x) fail.
ZetaResult zeta(const MacaulayTree& t, const DerivedLabels& d, int i, int j, int x);
ZetaResult zeta(const MacaulayTree& t, int i, int j, int x);
// The recursive definition, for cross-checking. Needs a > 0.
ZetaResult zeta_recursive(const MacaulayTree& t, int i, int j, int x);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  explicit operator bool() const { return ok; }
};

CheckReport is_compressed_like(const MacaulayTree& t);
// Throws PreconditionError-like StructureError on trees that are not compressed-like.
CheckReport is_compatible(const MacaulayTree& t);

MacaulayTree twin(const MacaulayTree& t, const Tuple& a_prime);
MacaulayTree wedge(const MacaulayTree& alpha, const MacaulayTree& alpha_prime);

// Either the trivial representation of 0 or a certified tree.
struct GeneralizedRep {
  Tuple type;
  std::optional<MacaulayTree> tree;

  static GeneralizedRep trivial(Tuple a) { return {std::move(a), std::nullopt}; }
  static GeneralizedRep of(MacaulayTree t) {
    Tuple a = t.type();
    return {std::move(a), std::move(t)};
  }
  bool is_trivial() const { return !tree.has_value(); }
  Count number() const { return tree ? represented_number(*tree) : 0; }
  bool operator==(const GeneralizedRep& o) const = default;
};

// condensed + compressed-like + compatible
bool is_generalized_rep(const MacaulayTree& t);

bool preceq(const GeneralizedRep& alpha, const GeneralizedRep& alpha_prime);
bool preceq(const MacaulayTree& alpha, const MacaulayTree& alpha_prime);
// Independent path: realization of the condensed twin sits inside that of alpha_prime.
bool preceq_by_realization(const MacaulayTree& alpha, const MacaulayTree& alpha_prime);

}  // namespace flagrep
