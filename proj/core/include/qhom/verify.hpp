#pragma once

// Named consistency checks of the homological dichotomy for algebras of
// global dimension two with a trivial maximal 1-orthogonal subcategory,
// aggregated into a report.

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qhom/approx.hpp"
#include "qhom/catalog.hpp"
#include "qhom/homology.hpp"

namespace qhom {

struct StructureFlags {
  Dimension gl_dim;
  bool nakayama = false;
  /// I^0(A) is projective.
  bool gorenstein_1 = false;
  /// gl.dim <= 2 and I^0(A), I^1(A) projective.
  bool auslander_algebra = false;
  /// Unknown without a complete universe.
  std::optional<bool> almost_hereditary;
  std::optional<bool> trivial_is_maximal_1_orthogonal;
  std::optional<OrthogonalityWitness> maximality_witness;
  /// pd I^1(A); empty when I^1(A) = 0.
  std::optional<Dimension> pd_i1;
  Dimension id_regular;
  Dimension id_regular_op;
};

[[nodiscard]] StructureFlags structure_flags(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed = kDefaultSeed);

enum class CheckStatus { pass, fail, vacuous, skipped };

[[nodiscard]] const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::ordered_json details;
};

struct CheckReport {
  nlohmann::ordered_json algebra;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const noexcept;
  [[nodiscard]] const CheckResult* find(const std::string& id) const noexcept;
};

/// Check ids in report order.
[[nodiscard]] const std::vector<std::string>& check_ids();

/// Runs one check; throws std::invalid_argument for an unknown id.
[[nodiscard]] CheckResult run_check(const AlgebraPtr& a, const std::string& id, std::size_t cap,
                                    std::uint64_t seed = kDefaultSeed);

[[nodiscard]] CheckReport verify_all(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed = kDefaultSeed);

[[nodiscard]] nlohmann::ordered_json to_json(const CheckReport& report);
[[nodiscard]] std::string to_text(const CheckReport& report);

}  // namespace qhom
