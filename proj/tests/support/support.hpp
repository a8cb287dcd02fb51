#pragma once

// Shared fixtures and generators for the test suites.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qhom/algebra.hpp"
#include "qhom/catalog.hpp"
#include "qhom/homology.hpp"
#include "qhom/rep.hpp"

namespace testing_support {

struct Fixture {
  std::string name;
  qhom::AlgebraPtr algebra;
  qhom::Universe universe;
  std::size_t cap = 0;
};

Fixture make_fixture(std::string name, qhom::AlgebraPtr algebra);

/// A2, E39(4), E39(5), E39(6), CYC2.
const std::vector<Fixture>& property_fixtures();
const Fixture& fixture(const std::string& name);

/// Path algebra of 2 -> 1.
qhom::AlgebraPtr a2();
/// Linear quiver n -> ... -> 1 modulo the path of length n - 1.
qhom::AlgebraPtr e39(std::size_t n);
/// Two-cycle modulo all paths of length two.
qhom::AlgebraPtr cyc2();

/// Universe object by name, e.g. "M1:3"; throws if absent.
qhom::Representation named(const Fixture& f, const std::string& name);

struct RandomModule {
  qhom::Representation module;
  /// Universe indices of the summands, sorted.
  std::vector<std::size_t> parts;
};

/// Direct sum of 1..max_parts random universe objects, disguised by a
/// random change of basis.
RandomModule random_module(const Fixture& f, std::mt19937_64& rng, std::size_t max_parts);

struct Extension {
  qhom::Morphism g;  // A -> B
  qhom::Morphism f;  // B -> C
};

/// A non-split short exact sequence 0 -> A -> B -> C -> 0, built as the
/// pushout of the first syzygy of C along a map that does not extend to
/// the projective cover. Empty if Ext^1(C, A) = 0.
std::optional<Extension> nonsplit_extension(const qhom::Representation& a, const qhom::Representation& c,
                                            std::mt19937_64& rng);

/// 0 -> A -> B -> C -> 0 is exact: g mono, f epi, fg = 0, dimensions add up.
bool is_short_exact(const Extension& e);

}  // namespace testing_support
