#pragma once

// Indecomposables of Nakayama algebras, the relation X ~> Y (a chain of
// nonzero maps) and the class of modules all of whose successors have
// injective dimension at most one.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/approx.hpp"
#include "qhom/homology.hpp"

namespace qhom {

struct Universe {
  AlgebraPtr algebra;
  std::vector<NamedModule> objects;
  /// True only when `objects` lists every indecomposable up to isomorphism.
  bool complete = false;

  [[nodiscard]] std::size_t size() const noexcept { return objects.size(); }
  [[nodiscard]] std::optional<std::size_t> find(const Representation& m, std::uint64_t seed = kDefaultSeed) const;
  [[nodiscard]] std::optional<std::size_t> find_name(std::string_view name) const;
};

/// P(v) / rad^k P(v) for a Nakayama algebra, 1 <= k <= Loewy length of P(v).
[[nodiscard]] Representation uniserial_quotient(const AlgebraPtr& a, std::size_t v, std::size_t k);

/// "M<socle>:<top>", with "/<length>" appended when the length exceeds the
/// number of vertices (only possible on a cycle).
[[nodiscard]] std::string uniserial_name(const BoundAlgebra& a, std::size_t top, std::size_t length);

/// All P(v)/rad^k, ordered by (length, top vertex). For non-Nakayama
/// algebras returns an empty, incomplete universe.
[[nodiscard]] Universe enumerate_indecomposables(const AlgebraPtr& a);

/// Entry (x, y) = dim Hom(U_x, U_y).
[[nodiscard]] std::vector<std::vector<std::size_t>> hom_table(const Universe& u);

/// Reflexive-transitive closure of nonzero Hom. Throws UnsupportedError on
/// an incomplete universe.
[[nodiscard]] std::vector<std::vector<bool>> reaches(const Universe& u);

/// Indices of X with id Y <= 1 for every Y reachable from X. A truncated
/// injective resolution means id Y > cap >= 1 and excludes X.
[[nodiscard]] std::vector<std::size_t> r_lambda(const Universe& u, std::size_t cap);

struct UniverseRow {
  std::string name;
  std::vector<std::size_t> dims;
  Dimension pd;
  Dimension id;
  bool projective = false;
  bool injective = false;
};

[[nodiscard]] std::vector<UniverseRow> describe_universe(const Universe& u, std::size_t cap);

/// The objects of `u` as a subcategory.
[[nodiscard]] SubcategorySet as_subcategory(const Universe& u, const std::vector<std::size_t>& indices);

/// Renames the objects of `c` after their isomorphic counterparts in `u`
/// where one exists.
[[nodiscard]] SubcategorySet with_universe_names(const SubcategorySet& c, const Universe& u,
                                                 std::uint64_t seed = kDefaultSeed);

}  // namespace qhom
