#pragma once

// Quivers, paths, monomial admissible ideals and the bound quiver algebra
// they present.
//
// Paths are written in composition order: the word a1 a2 ... am applies am
// first, so source(path) = source(am) and target(path) = target(a1). A
// relation word therefore transcribes verbatim from the usual algebraic
// notation, e.g. for arrows a_i : i+1 -> i the word a1 a2 a3 is the path
// 4 -> 3 -> 2 -> 1.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/linalg.hpp"

namespace qhom {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Validates that vertex labels and arrow names are unique and that arrows
  /// refer to existing vertices.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] const std::string& label(std::size_t v) const { return vertices_.at(v); }
  [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  [[nodiscard]] std::optional<std::size_t> find_vertex(std::string_view label) const;
  [[nodiscard]] std::optional<std::size_t> find_arrow(std::string_view name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Arrow indices in composition order (last entry is applied first).
  std::vector<std::size_t> arrows;

  [[nodiscard]] std::size_t length() const noexcept { return arrows.size(); }
  [[nodiscard]] bool is_stationary() const noexcept { return arrows.empty(); }

  static Path stationary(std::size_t v) { return Path{v, v, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// `outer` after `inner`; requires target(inner) == source(outer).
[[nodiscard]] Path compose(const Path& outer, const Path& inner);
/// True iff `word` occurs as a contiguous block of `path`.
[[nodiscard]] bool contains_subword(const Path& path, const Path& word) noexcept;

class BoundAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

/// KQ / I for a monomial admissible ideal I over F_p.
///
/// Instances are created in pairs with their opposite algebra, so
/// `a->opposite()->opposite()` is the same object as `a`. All members are
/// immutable after construction.
class BoundAlgebra {
 public:
  /// Validates the relations and admissibility; throws SpecError.
  static AlgebraPtr create(Quiver quiver, std::vector<Path> relations, Scalar characteristic = 101);

  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const std::vector<Path>& relations() const noexcept { return relations_; }
  [[nodiscard]] PrimeField field() const noexcept { return field_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return quiver_.arrow_count(); }

  /// Surviving paths ordered by (length, arrow names lexicographically);
  /// stationary paths come first in vertex order.
  [[nodiscard]] const std::vector<Path>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
  /// Basis paths from `from` to `to`, in basis order.
  [[nodiscard]] const std::vector<Path>& paths_between(std::size_t from, std::size_t to) const;
  [[nodiscard]] bool survives(const Path& p) const noexcept;
  [[nodiscard]] std::size_t loewy_length() const noexcept;

  [[nodiscard]] AlgebraPtr opposite() const;
  /// Word reversal carrying a path of this algebra to the opposite algebra.
  [[nodiscard]] Path reversed(const Path& p) const;

  [[nodiscard]] std::string path_name(const Path& p) const;

  /// Same quiver, relations and field.
  [[nodiscard]] bool same_as(const BoundAlgebra& other) const noexcept;

 private:
  struct Pair;
  BoundAlgebra() = default;
  static void initialise(BoundAlgebra& a, Quiver quiver, std::vector<Path> relations, PrimeField field);

  Quiver quiver_;
  std::vector<Path> relations_;
  PrimeField field_{};
  std::vector<Path> basis_;
  std::vector<std::vector<Path>> between_;  // from * n + to
  const BoundAlgebra* twin_ = nullptr;
  std::weak_ptr<const void> owner_;
};

[[nodiscard]] bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept;

[[nodiscard]] const std::vector<Path>& path_basis(const BoundAlgebra& a);
[[nodiscard]] AlgebraPtr opposite(const AlgebraPtr& a);
[[nodiscard]] bool is_nakayama(const BoundAlgebra& a);
[[nodiscard]] bool is_acyclic(const BoundAlgebra& a);
/// Entry (v, w) counts surviving paths from w to v.
[[nodiscard]] std::vector<std::vector<std::int64_t>> cartan_matrix(const BoundAlgebra& a);

/// Parses the TOML algebra spec format; throws SpecError.
[[nodiscard]] AlgebraPtr parse_algebra(std::string_view spec_text);
[[nodiscard]] AlgebraPtr load_algebra(const std::string& path);

/// Linear quiver 1 <- 2 <- ... <- n with arrows a_i : i+1 -> i and the single
/// relation a1 a2 ... a(n-1) (n >= 3).
[[nodiscard]] AlgebraPtr make_example_algebra(std::size_t n, Scalar characteristic = 101);
/// Linear quiver 1 <- 2 <- ... <- n without relations.
[[nodiscard]] AlgebraPtr make_linear_algebra(std::size_t n, Scalar characteristic = 101);
/// Oriented n-cycle with every path of length `kill` forbidden.
[[nodiscard]] AlgebraPtr make_cyclic_nakayama(std::size_t n, std::size_t kill, Scalar characteristic = 101);

}  // namespace qhom
