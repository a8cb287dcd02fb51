#pragma once

// Minimal resolutions, projective/injective dimensions and Ext.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhom/rep.hpp"

namespace qhom {

enum class ResolutionKind { projective, injective };

/// Projective: terms P_0..P_k, differentials d_i : P_i -> P_{i-1} stored at
/// index i-1, augmentation P_0 -> M. Injective: terms I^0..I^k, differentials
/// d^i : I^i -> I^{i+1} at index i, augmentation M -> I^0.
struct Resolution {
  ResolutionKind kind;
  Representation target;
  std::vector<Representation> terms;
  /// Vertex of each indecomposable summand P(v) / I(v) of each term.
  std::vector<std::vector<std::size_t>> term_vertices;
  std::vector<Morphism> differentials;
  Morphism augmentation;
  /// The cap was reached with a nonzero (co)syzygy left over.
  bool truncated = false;

  [[nodiscard]] std::size_t length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Either an exact value or "at least cap".
struct Dimension {
  std::optional<std::size_t> value;
  std::size_t cap = 0;

  [[nodiscard]] bool finite() const noexcept { return value.has_value(); }
  [[nodiscard]] std::string str() const;
  static Dimension exact(std::size_t v) { return Dimension{v, 0}; }
  static Dimension at_least(std::size_t cap) { return Dimension{std::nullopt, cap}; }

  friend bool operator==(const Dimension& a, const Dimension& b) {
    return a.value == b.value && (a.value || a.cap == b.cap);
  }
};

/// Maximum of two dimensions; an unbounded one wins.
[[nodiscard]] Dimension max(const Dimension& a, const Dimension& b);

/// 2 |vertices| + 2.
[[nodiscard]] std::size_t default_cap(const BoundAlgebra& a) noexcept;

[[nodiscard]] Resolution minimal_resolution(const Representation& m, ResolutionKind kind, std::size_t cap);
[[nodiscard]] Dimension homological_dimension(const Representation& m, ResolutionKind kind, std::size_t cap);
[[nodiscard]] Dimension projective_dimension(const Representation& m, std::size_t cap);
[[nodiscard]] Dimension injective_dimension(const Representation& m, std::size_t cap);
[[nodiscard]] Dimension global_dimension(const AlgebraPtr& a, std::size_t cap);

/// dim Ext^i(M, N) from Hom(P_*(M), N). Throws TruncationError if the
/// resolution stops short of P_{i+1}.
[[nodiscard]] std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i, std::size_t cap);
/// Same, reusing a projective resolution of M.
[[nodiscard]] std::size_t ext_dim(const Resolution& pm, const Representation& n, std::size_t i);
/// dim Ext^i(M, N) from Hom(M, I^*(N)).
[[nodiscard]] std::size_t ext_dim_via_injective(const Representation& m, const Representation& n, std::size_t i,
                                                std::size_t cap);
[[nodiscard]] std::size_t ext_dim_via_injective(const Representation& m, const Resolution& in, std::size_t i);

/// Ext^i(M, A) as a module over the opposite algebra. Throws TruncationError
/// if the projective resolution of M is not finite within `cap`.
[[nodiscard]] Representation ext_module(const Representation& m, std::size_t i, std::size_t cap);
/// The dual complex P_0* -> P_1* -> ... of a finite projective resolution,
/// as a complex of projectives over the opposite algebra. Element k is the
/// map P_k* -> P_{k+1}*.
[[nodiscard]] std::vector<Morphism> dual_complex(const Resolution& pm);

/// Morphism out of a direct sum of P(v) (v in `source_vertices`) into
/// `target`, sending the generator e_v of summand s to the column vector
/// generator_images[s] of target at vertex source_vertices[s].
[[nodiscard]] Morphism projective_morphism(const Representation& source,
                                           const std::vector<std::size_t>& source_vertices,
                                           const Representation& target, const std::vector<Matrix>& generator_images);

/// sum_i (-1)^i dim Ext^i(M, N) from dimension vectors and the Cartan
/// matrix. Throws UnsupportedError if the Cartan matrix is singular or the
/// value is not an integer.
[[nodiscard]] std::int64_t euler_form(const BoundAlgebra& a, const std::vector<std::size_t>& dim_m,
                                      const std::vector<std::size_t>& dim_n);

}  // namespace qhom
