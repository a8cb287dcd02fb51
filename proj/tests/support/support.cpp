#include "support.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhom/linalg.hpp"

namespace testing_support {

using namespace qhom;

Fixture make_fixture(std::string name, AlgebraPtr algebra) {
  auto u = enumerate_indecomposables(algebra);
  const auto cap = default_cap(*algebra);
  return {std::move(name), std::move(algebra), std::move(u), cap};
}

AlgebraPtr a2() { return make_linear_algebra(2); }
AlgebraPtr e39(std::size_t n) { return make_example_algebra(n); }
AlgebraPtr cyc2() { return make_cyclic_nakayama(2, 2); }

const std::vector<Fixture>& property_fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    v.push_back(make_fixture("A2", a2()));
    for (std::size_t n = 4; n <= 6; ++n) v.push_back(make_fixture("E39(" + std::to_string(n) + ")", e39(n)));
    v.push_back(make_fixture("CYC2", cyc2()));
    return v;
  }();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : property_fixtures())
    if (f.name == name) return f;
  throw std::invalid_argument("no fixture " + name);
}

Representation named(const Fixture& f, const std::string& name) {
  const auto k = f.universe.find_name(name);
  if (!k) throw std::invalid_argument("no universe object " + name + " in " + f.name);
  return f.universe.objects[*k].module;
}

RandomModule random_module(const Fixture& f, std::mt19937_64& rng, std::size_t max_parts) {
  std::uniform_int_distribution<std::size_t> count(1, max_parts);
  std::uniform_int_distribution<std::size_t> pick(0, f.universe.size() - 1);
  RandomModule out{Representation::zero(f.algebra), {}};
  std::vector<Representation> parts;
  for (std::size_t k = count(rng); k-- > 0;) {
    const auto idx = pick(rng);
    out.parts.push_back(idx);
    parts.push_back(f.universe.objects[idx].module);
  }
  std::sort(out.parts.begin(), out.parts.end());
  out.module = random_basis_change(direct_sum(f.algebra, parts), rng()).target();
  return out;
}

std::optional<Extension> nonsplit_extension(const Representation& a, const Representation& c, std::mt19937_64& rng) {
  if (a.is_zero() || c.is_zero()) return std::nullopt;
  const auto field = a.field();
  const auto cover = projective_cover(c).map;
  const auto parts = morphism_parts(cover);
  const HomSpace from_syzygy(parts.kernel, a);
  if (from_syzygy.dimension() == 0) return std::nullopt;

  // Maps out of the syzygy that extend to the cover; a class outside their
  // span is a nonzero element of Ext^1(C, A).
  std::vector<Matrix> columns;
  for (const auto& g : hom_basis(cover.source(), a)) {
    const auto coords = from_syzygy.coordinates(compose(g, parts.kernel_inclusion));
    Matrix col(coords.size(), 1, field);
    for (std::size_t k = 0; k < coords.size(); ++k) col(k, 0) = coords[k];
    columns.push_back(col);
  }
  const std::size_t d = from_syzygy.dimension();
  const std::size_t base_rank = columns.empty() ? 0 : rank(hstack(columns, d, field));
  if (base_rank == d) return std::nullopt;

  std::uniform_int_distribution<Scalar> coeff(0, field.modulus() - 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Scalar> h(d);
    for (auto& x : h) x = coeff(rng);
    Matrix col(d, 1, field);
    for (std::size_t k = 0; k < d; ++k) col(k, 0) = h[k];
    auto with = columns;
    with.push_back(col);
    if (rank(hstack(with, d, field)) == base_rank) continue;

    const auto hmap = from_syzygy.combination(h);
    const auto po = pushout(parts.kernel_inclusion, hmap);
    const Representation pieces[] = {cover.source(), a};
    const auto sum = direct_sum_with_maps(a.algebra(), pieces);
    const Morphism onto[] = {po.from_first, po.from_second};
    const auto q = copair(sum, onto, po.object);
    const Morphism down[] = {cover, Morphism::zero(a, c)};
    const auto t = copair(sum, down, c);
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < c.dims().size(); ++v) {
      auto x = solve(q.block(v).transpose(), t.block(v).transpose());
      if (!x) throw std::logic_error("nonsplit_extension: map does not factor through the pushout");
      blocks.push_back(x->transpose());
    }
    return Extension{po.from_second, Morphism(po.object, c, std::move(blocks))};
  }
  return std::nullopt;
}

bool is_short_exact(const Extension& e) {
  if (!e.g.is_mono() || !e.f.is_epi() || !compose(e.f, e.g).is_zero()) return false;
  const auto& a = e.g.source().dims();
  const auto& b = e.g.target().dims();
  const auto& c = e.f.target().dims();
  for (std::size_t v = 0; v < b.size(); ++v)
    if (a[v] + c[v] != b[v]) return false;
  return true;
}

}  // namespace testing_support
