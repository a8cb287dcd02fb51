#pragma once

// Subcategories add(C), C-approximations, Ext-orthogonal complements and
// the maximal n-orthogonality test.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhom/rep.hpp"

namespace qhom {

/// Finitely many pairwise non-isomorphic indecomposables; stands for add of
/// their direct sum.
struct SubcategorySet {
  AlgebraPtr algebra;
  std::vector<NamedModule> objects;

  [[nodiscard]] std::size_t size() const noexcept { return objects.size(); }
  /// Index of the object isomorphic to `m`, if any.
  [[nodiscard]] std::optional<std::size_t> find(const Representation& m, std::uint64_t seed = kDefaultSeed) const;
  /// Every indecomposable summand of `m` is isomorphic to an object.
  [[nodiscard]] bool contains_sum(const Representation& m, std::uint64_t seed = kDefaultSeed) const;
};

/// Indecomposable projectives P(v) followed by the injectives I(v) not
/// already isomorphic to a projective. Named "P<v>" / "I<v>".
[[nodiscard]] SubcategorySet trivial_candidate(const AlgebraPtr& a, std::uint64_t seed = kDefaultSeed);

/// Left: Hom(target, C') -> Hom(source, C') onto for every C'. Right: dually
/// Hom(C', source) -> Hom(C', target). Throws std::invalid_argument if the
/// C-side of f is not in add C.
[[nodiscard]] bool is_approximation(const Morphism& f, const SubcategorySet& c, Side side,
                                    std::uint64_t seed = kDefaultSeed);

/// Minimal right approximation C_M -> M or minimal left approximation
/// M -> C^M.
[[nodiscard]] Morphism minimal_approximation(const SubcategorySet& c, const Representation& m, Side side,
                                             std::uint64_t seed = kDefaultSeed);

/// Left: indices of X in `universe` with Ext^i(X, C') = 0 for all C' and
/// 1 <= i <= n. Right: Ext^i(C', X) = 0.
[[nodiscard]] std::vector<std::size_t> perp(const SubcategorySet& c, std::size_t n, Side side,
                                            const std::vector<NamedModule>& universe, std::size_t cap);

/// Why a subcategory failed to be maximal n-orthogonal. Either an object of
/// C outside its own perp (`degree` and `partner` name the nonvanishing
/// Ext), or a module of the universe inside the perp but not in C.
struct OrthogonalityWitness {
  std::string module;
  Side direction = Side::left;
  std::optional<std::size_t> degree;
  std::optional<std::string> partner;

  /// Human-readable form, e.g. "Ext^1(S2, S1) != 0".
  [[nodiscard]] std::string describe() const;
};

struct MaximalityResult {
  bool maximal = false;
  /// False if the verdict only covers the supplied universe.
  bool complete = false;
  std::optional<OrthogonalityWitness> witness;
};

/// C = left perp = right perp over `universe`. The right direction is
/// checked before the left one.
[[nodiscard]] MaximalityResult is_maximal_orthogonal(const SubcategorySet& c, std::size_t n,
                                                     const std::vector<NamedModule>& universe, bool complete,
                                                     std::size_t cap, std::uint64_t seed = kDefaultSeed);

}  // namespace qhom
