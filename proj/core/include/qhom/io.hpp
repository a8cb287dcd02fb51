#pragma once

// Text and JSON formats: module names, representation files, subcategory
// lists and resolution printing.

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/approx.hpp"
#include "qhom/catalog.hpp"
#include "qhom/homology.hpp"

namespace qhom {

/// {"dims": {vertex: int}, "maps": {arrow: [[row-major ints]]}}; entries are
/// reduced mod p. Throws SpecError.
[[nodiscard]] Representation representation_from_json(const AlgebraPtr& a, const nlohmann::json& j);
[[nodiscard]] nlohmann::ordered_json representation_to_json(const Representation& m);
[[nodiscard]] Representation load_representation(const AlgebraPtr& a, const std::string& path);

/// Resolves P<v>, I<v>, S<v>, M<i>:<j>[/<len>] or @file.json. Interval
/// names need a complete universe. Throws SpecError.
[[nodiscard]] NamedModule parse_module(const AlgebraPtr& a, std::string_view name, const Universe& universe);

/// One module name per line; blank lines and lines starting with '#' are
/// ignored. Objects must be indecomposable and pairwise non-isomorphic.
[[nodiscard]] SubcategorySet parse_subcategory(const AlgebraPtr& a, std::string_view text, const Universe& universe,
                                               std::uint64_t seed = kDefaultSeed);
[[nodiscard]] SubcategorySet load_subcategory(const AlgebraPtr& a, const std::string& path, const Universe& universe,
                                              std::uint64_t seed = kDefaultSeed);

/// "(1,2,2,1)".
[[nodiscard]] std::string format_dims(const std::vector<std::size_t>& dims);

/// "P1 ⊕ P3^2" from the summand vertices of a projective or injective term.
[[nodiscard]] std::string format_term(const BoundAlgebra& a, char letter, const std::vector<std::size_t>& vertices);

/// Name of `m` in `universe` if present, else a standard P/I/S name, else
/// its dimension vector.
[[nodiscard]] std::string display_name(const Representation& m, const Universe& universe,
                                       std::uint64_t seed = kDefaultSeed);

/// "0 → P1 → P3 → P4 → S4 → 0" followed by one line per term with its
/// dimension vector.
[[nodiscard]] std::string format_resolution(const Resolution& r, const std::string& target_name);

}  // namespace qhom
