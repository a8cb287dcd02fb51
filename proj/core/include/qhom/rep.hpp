#pragma once

// Finite-dimensional modules over a bound quiver algebra, as quiver
// representations, and the homomorphisms between them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhom/algebra.hpp"
#include "qhom/linalg.hpp"

namespace qhom {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

/// A module over `algebra()`: a vector space of dimension dims[v] at each
/// vertex and a dims[target] x dims[source] matrix per arrow, with every
/// relation acting as zero. Immutable; copies share storage.
class Representation {
 public:
  /// Validates shapes and relations; throws std::invalid_argument.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Representation zero(AlgebraPtr algebra);

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return data_->algebra; }
  [[nodiscard]] PrimeField field() const noexcept { return data_->algebra->field(); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return data_->dims; }
  [[nodiscard]] std::size_t dim(std::size_t v) const { return data_->dims.at(v); }
  [[nodiscard]] const Matrix& map(std::size_t arrow) const { return data_->maps.at(arrow); }
  [[nodiscard]] const std::vector<Matrix>& maps() const noexcept { return data_->maps; }
  [[nodiscard]] std::size_t total_dimension() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return total_dimension() == 0; }

  /// Composite of the arrow matrices along `p` (identity for e_v).
  [[nodiscard]] Matrix path_action(const Path& p) const;

  /// Structural equality: same algebra, dimensions and matrices.
  friend bool operator==(const Representation& a, const Representation& b);

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
  };
  struct Unchecked {};
  Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  std::shared_ptr<const Data> data_;

  friend Representation make_unchecked(AlgebraPtr, std::vector<std::size_t>, std::vector<Matrix>);
};

/// Representation without the relation check; for internal constructions
/// that satisfy the relations by design.
[[nodiscard]] Representation make_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims,
                                            std::vector<Matrix> maps);

/// A module homomorphism given by one matrix per vertex.
class Morphism {
 public:
  /// Validates shapes and the commuting square for every arrow.
  Morphism(Representation source, Representation target, std::vector<Matrix> blocks);

  static Morphism identity(const Representation& m);
  static Morphism zero(const Representation& source, const Representation& target);
  /// Skips the intertwining check.
  static Morphism unchecked(Representation source, Representation target, std::vector<Matrix> blocks);

  [[nodiscard]] const Representation& source() const noexcept { return source_; }
  [[nodiscard]] const Representation& target() const noexcept { return target_; }
  [[nodiscard]] const Matrix& block(std::size_t v) const { return blocks_.at(v); }
  [[nodiscard]] const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_mono() const;
  [[nodiscard]] bool is_epi() const;
  [[nodiscard]] bool is_iso() const;
  /// True iff every commuting square holds.
  [[nodiscard]] bool intertwines() const;

  /// Entries of all blocks concatenated in vertex order, row-major.
  [[nodiscard]] std::vector<Scalar> flatten() const;

  [[nodiscard]] Morphism scaled(Scalar s) const;
  friend Morphism operator+(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a, const Morphism& b);

 private:
  struct Unchecked {};
  Morphism(Unchecked, Representation source, Representation target, std::vector<Matrix> blocks);

  Representation source_;
  Representation target_;
  std::vector<Matrix> blocks_;
};

/// `outer` after `inner`.
[[nodiscard]] Morphism compose(const Morphism& outer, const Morphism& inner);

enum class StandardKind { simple, projective, injective };

/// S(v), P(v) or I(v). The projective P(v) has basis the surviving paths
/// starting at v, in algebra basis order at each vertex.
[[nodiscard]] Representation standard_module(const AlgebraPtr& algebra, StandardKind kind, std::size_t v);

/// The linear dual, a module over the opposite algebra.
[[nodiscard]] Representation duality(const Representation& m);
/// D(f : M -> N) = Df : DN -> DM.
[[nodiscard]] Morphism duality(const Morphism& f);

/// Hom_A(M, N) as the null space of the intertwiner system.
class HomSpace {
 public:
  HomSpace(Representation source, Representation target);

  [[nodiscard]] std::size_t dimension() const noexcept { return kernel_.free.size(); }
  [[nodiscard]] const Representation& source() const noexcept { return source_; }
  [[nodiscard]] const Representation& target() const noexcept { return target_; }
  [[nodiscard]] Morphism element(std::size_t k) const;
  [[nodiscard]] std::vector<Morphism> basis() const;
  /// Linear combination of the basis with the given coefficients.
  [[nodiscard]] Morphism combination(std::span<const Scalar> coeffs) const;
  /// Coordinates of `f` in the basis; `f` must lie in the space.
  [[nodiscard]] std::vector<Scalar> coordinates(const Morphism& f) const;
  /// Columns are the flattened basis morphisms.
  [[nodiscard]] const Matrix& basis_matrix() const noexcept { return kernel_.basis; }

 private:
  Representation source_;
  Representation target_;
  NullSpace kernel_;
};

[[nodiscard]] std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
[[nodiscard]] std::size_t hom_dimension(const Representation& m, const Representation& n);

struct MorphismParts {
  Representation kernel;
  Morphism kernel_inclusion;  // kernel -> source
  Representation image;
  Morphism coimage_map;      // source -> image
  Morphism image_inclusion;  // image -> target
  Representation cokernel;
  Morphism cokernel_projection;  // target -> cokernel
};

[[nodiscard]] MorphismParts morphism_parts(const Morphism& f);

/// Lifts g : X -> N through a monomorphism i : K -> N with im g inside im i.
[[nodiscard]] Morphism factor_through_mono(const Morphism& g, const Morphism& mono);

/// Submodule spanned at each vertex by the columns of `bases` (which must be
/// independent and stable under the arrows), with its inclusion.
[[nodiscard]] Morphism submodule(const Representation& m, std::vector<Matrix> bases);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

[[nodiscard]] DirectSum direct_sum_with_maps(const AlgebraPtr& algebra, std::span<const Representation> parts);
[[nodiscard]] Representation direct_sum(const AlgebraPtr& algebra, std::span<const Representation> parts);
/// Morphism out of a direct sum given by its components.
[[nodiscard]] Morphism copair(const DirectSum& sum, std::span<const Morphism> components, const Representation& target);
/// Morphism into a direct sum given by its components.
[[nodiscard]] Morphism pair(const DirectSum& sum, std::span<const Morphism> components, const Representation& source);

/// Y -> W <- Z completing f : X -> Y, g : X -> Z to a pushout square.
struct Pushout {
  Representation object;
  Morphism from_first;
  Morphism from_second;
};
[[nodiscard]] Pushout pushout(const Morphism& f, const Morphism& g);

/// A random change of basis at every vertex, with the isomorphism M -> M'.
[[nodiscard]] Morphism random_basis_change(const Representation& m, std::uint64_t seed);

[[nodiscard]] std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n,
                                                       std::uint64_t seed = kDefaultSeed);
[[nodiscard]] bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = kDefaultSeed);

/// An indecomposable summand with its split inclusion and projection.
struct Summand {
  Representation module;
  Morphism inclusion;
  Morphism projection;
};

/// Krull-Schmidt decomposition via Fitting splittings of endomorphisms.
/// Throws DecompositionError if the retry bound is exhausted.
[[nodiscard]] std::vector<Summand> decompose_with_maps(const Representation& m, std::uint64_t seed = kDefaultSeed);
[[nodiscard]] std::vector<Representation> decompose(const Representation& m, std::uint64_t seed = kDefaultSeed);
[[nodiscard]] bool is_indecomposable(const Representation& m, std::uint64_t seed = kDefaultSeed);

struct FiltrationParts {
  Representation radical;
  Morphism radical_inclusion;
  Representation top;
  Morphism top_projection;
  Representation socle;
  Morphism socle_inclusion;
};

[[nodiscard]] FiltrationParts filtration_parts(const Representation& m);
/// Multiplicity of S(v) in top(M) / soc(M), per vertex.
[[nodiscard]] std::vector<std::size_t> top_multiplicities(const Representation& m);
[[nodiscard]] std::vector<std::size_t> socle_multiplicities(const Representation& m);

enum class CoverSide { projective_cover, injective_envelope };

/// A projective cover P -> M or injective envelope M -> I, with the vertex
/// of each indecomposable summand of P (resp. I) in order.
struct Cover {
  Morphism map;
  std::vector<std::size_t> summand_vertices;
};

[[nodiscard]] Cover projective_cover(const Representation& m);
[[nodiscard]] Cover injective_envelope(const Representation& m);
/// Throws std::invalid_argument for the zero module.
[[nodiscard]] Morphism cover_envelope(const Representation& m, CoverSide side);

/// Direct sum of P(v) (or I(v)) over `vertices`, in order.
[[nodiscard]] Representation standard_sum(const AlgebraPtr& algebra, StandardKind kind,
                                          std::span<const std::size_t> vertices);

enum class Side { left, right };

struct MinimalVersion {
  Morphism reduced;
  Representation discarded;
};

/// Splits off the largest summand on which f is redundant: for `right`,
/// source = discarded (+) source(reduced) and f factors through reduced.
[[nodiscard]] MinimalVersion minimal_version(const Morphism& f, Side side, std::uint64_t seed = kDefaultSeed);
[[nodiscard]] bool is_minimal(const Morphism& f, Side side, std::uint64_t seed = kDefaultSeed);

/// Right minimal version of the map out of a direct sum whose summands are
/// already known indecomposable.
[[nodiscard]] MinimalVersion right_minimal_from_summands(std::span<const Representation> summands,
                                                         std::span<const Morphism> components,
                                                         const Representation& target);

/// A module with a display name, as used by subcategories and catalogs.
struct NamedModule {
  std::string name;
  Representation module;
};

}  // namespace qhom
