#include <doctest.h>

#include <numeric>

#include "qhom/approx.hpp"
#include "qhom/rep.hpp"
#include "support.hpp"

using namespace qhom;
using testing_support::fixture;
using testing_support::named;

namespace {

Representation simple(const AlgebraPtr& a, std::size_t v) { return standard_module(a, StandardKind::simple, v); }
Representation proj(const AlgebraPtr& a, std::size_t v) { return standard_module(a, StandardKind::projective, v); }
Representation inj(const AlgebraPtr& a, std::size_t v) { return standard_module(a, StandardKind::injective, v); }

using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("standard modules") {
  const auto& a2 = fixture("A2");
  const auto s1 = simple(a2.algebra, 0);
  CHECK(s1.dims() == Dims{1, 0});
  CHECK(s1.map(0).is_zero());
  const auto& e = fixture("E39(4)");
  CHECK(proj(e.algebra, 3).dims() == Dims{0, 1, 1, 1});
  CHECK(inj(e.algebra, 0).dims() == Dims{1, 1, 1, 0});
  CHECK(is_isomorphic(proj(e.algebra, 2), inj(e.algebra, 0)));
  CHECK(is_isomorphic(proj(e.algebra, 3), named(e, "M2:4")));
  CHECK(proj(e.algebra, 0) == named(e, "M1:1"));
}

TEST_CASE("constructor validation") {
  const auto a = fixture("E39(4)").algebra;
  const auto f = a->field();
  std::vector<Matrix> ids(3, Matrix::identity(1, f));
  // Every arrow an isomorphism: the relation a1a2a3 does not vanish.
  CHECK_THROWS_AS(Representation(a, Dims{1, 1, 1, 1}, ids), std::invalid_argument);
  CHECK_THROWS_AS(Representation(a, Dims{1, 1, 1}, ids), std::invalid_argument);
  CHECK_THROWS_AS(Representation(a, Dims{2, 1, 1, 0}, {Matrix::identity(1, f), Matrix(1, 1, f), Matrix(1, 0, f)}),
                  std::invalid_argument);
  CHECK(Representation::zero(a).is_zero());
}

TEST_CASE("path action") {
  const auto& e = fixture("E39(4)");
  const auto m = named(e, "M1:3");
  const Path p{2, 0, {0, 1}};
  CHECK(m.path_action(p) == m.map(0) * m.map(1));
  CHECK(m.path_action(Path::stationary(1)) == Matrix::identity(1, m.field()));
}

TEST_CASE("duality") {
  for (const auto& f : testing_support::property_fixtures()) {
    const auto op = f.algebra->opposite();
    for (std::size_t v = 0; v < f.algebra->vertex_count(); ++v) {
      const auto ds = duality(simple(f.algebra, v));
      CHECK(ds.algebra() == op);
      CHECK(is_isomorphic(ds, simple(op, v)));
      CHECK(is_isomorphic(duality(proj(f.algebra, v)), inj(op, v)));
    }
    for (const auto& obj : f.universe.objects) {
      CHECK(duality(obj.module).dims() == obj.module.dims());
      CHECK(duality(duality(obj.module)) == obj.module);
    }
  }
}

TEST_CASE("hom spaces") {
  const auto& e = fixture("E39(4)");
  for (const auto& obj : e.universe.objects)
    for (std::size_t v = 0; v < 4; ++v) CHECK(hom_dimension(proj(e.algebra, v), obj.module) == obj.module.dim(v));
  CHECK(hom_dimension(named(e, "M3:4"), named(e, "M2:4")) == 0);
  CHECK(hom_dimension(simple(e.algebra, 1), simple(e.algebra, 1)) == 1);
  CHECK(hom_basis(Representation::zero(e.algebra), named(e, "M1:3")).empty());
  for (const auto& g : hom_basis(named(e, "M1:2"), named(e, "M1:3"))) CHECK(g.intertwines());

  const HomSpace h(named(e, "M2:4"), named(e, "M2:4"));
  REQUIRE(h.dimension() == 1);
  const auto id = Morphism::identity(named(e, "M2:4"));
  const auto c = h.coordinates(id);
  CHECK(h.combination(c).flatten() == id.flatten());
}

TEST_CASE("morphism validation and arithmetic") {
  const auto& a2 = fixture("A2");
  const auto p2 = proj(a2.algebra, 1);
  const auto s1 = simple(a2.algebra, 0);
  const auto f = p2.field();
  // P2 -> S1 nonzero at vertex 1 does not commute with the arrow.
  CHECK_THROWS_AS(Morphism(p2, s1, {Matrix::from_rows({{1}}, 1, f), Matrix(0, 1, f)}), std::invalid_argument);
  const auto id = Morphism::identity(p2);
  CHECK(id.is_iso());
  CHECK((id - id).is_zero());
  CHECK((id + id).flatten() == id.scaled(2).flatten());
  CHECK(compose(id, id).flatten() == id.flatten());
  CHECK(Morphism::zero(p2, s1).is_zero());
}

TEST_CASE("kernels and cokernels") {
  const auto& a2 = fixture("A2");
  const auto cover = projective_cover(simple(a2.algebra, 1)).map;
  CHECK(is_isomorphic(cover.source(), proj(a2.algebra, 1)));
  const auto parts = morphism_parts(cover);
  CHECK(is_isomorphic(parts.kernel, simple(a2.algebra, 0)));
  CHECK(parts.cokernel.is_zero());
  CHECK(compose(cover, parts.kernel_inclusion).is_zero());

  const auto& e = fixture("E39(4)");
  const auto z = Morphism::zero(named(e, "M1:3"), named(e, "M2:4"));
  const auto zp = morphism_parts(z);
  CHECK(zp.kernel.dims() == named(e, "M1:3").dims());
  CHECK(zp.cokernel.dims() == named(e, "M2:4").dims());
  CHECK(zp.image.is_zero());

  const auto c4 = projective_cover(simple(e.algebra, 3)).map;
  CHECK(is_isomorphic(morphism_parts(c4).kernel, named(e, "M2:3")));
}

TEST_CASE("direct sums") {
  const auto& a2 = fixture("A2");
  CHECK(direct_sum(a2.algebra, std::vector<Representation>{}).is_zero());
  const Representation ss[] = {simple(a2.algebra, 0), simple(a2.algebra, 1)};
  const auto s = direct_sum(a2.algebra, ss);
  CHECK(s.dims() == Dims{1, 1});
  CHECK(s.map(0).is_zero());
  const auto& e = fixture("E39(4)");
  const Representation ps[] = {proj(e.algebra, 2), proj(e.algebra, 3)};
  const auto ds = direct_sum_with_maps(e.algebra, ps);
  CHECK(ds.sum.dims() == Dims{1, 2, 2, 1});
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(compose(ds.projections[k], ds.injections[k]).is_iso());
    CHECK(compose(ds.projections[1 - k], ds.injections[k]).is_zero());
  }
}

TEST_CASE("isomorphism tests") {
  const auto& e = fixture("E39(4)");
  for (const auto& obj : e.universe.objects) {
    CHECK(is_isomorphic(obj.module, obj.module));
    const auto change = random_basis_change(obj.module, 17);
    CHECK(change.is_iso());
    const auto iso = find_isomorphism(obj.module, change.target());
    REQUIRE(iso);
    CHECK(iso->is_iso());
    CHECK(iso->intertwines());
  }
  CHECK_FALSE(is_isomorphic(simple(e.algebra, 0), simple(e.algebra, 1)));
  // Same dimension vector, different modules.
  const auto& a2 = fixture("A2");
  const Representation ss[] = {simple(a2.algebra, 0), simple(a2.algebra, 1)};
  CHECK_FALSE(is_isomorphic(direct_sum(a2.algebra, ss), proj(a2.algebra, 1)));
}

TEST_CASE("decomposition") {
  const auto& a2 = fixture("A2");
  CHECK(decompose(Representation::zero(a2.algebra)).empty());
  const Representation two[] = {simple(a2.algebra, 0), simple(a2.algebra, 0)};
  const auto parts = decompose(direct_sum(a2.algebra, two));
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(is_isomorphic(p, simple(a2.algebra, 0)));

  const auto& e = fixture("E39(4)");
  std::vector<Representation> ps;
  for (std::size_t v = 0; v < 4; ++v) ps.push_back(proj(e.algebra, v));
  const auto regular = direct_sum(e.algebra, ps);
  const auto i0 = injective_envelope(regular).map.target();
  std::size_t m13 = 0;
  std::size_t m24 = 0;
  for (const auto& p : decompose(i0)) {
    if (is_isomorphic(p, named(e, "M1:3")))
      ++m13;
    else if (is_isomorphic(p, named(e, "M2:4")))
      ++m24;
    else
      FAIL("unexpected summand of I0");
  }
  CHECK(m13 == 3);
  CHECK(m24 == 1);

  for (const auto& obj : e.universe.objects) CHECK(is_indecomposable(obj.module));
  CHECK_FALSE(is_indecomposable(regular));

  const auto summands = decompose_with_maps(regular, 3);
  CHECK(summands.size() == 4);
  for (const auto& s : summands) CHECK(compose(s.projection, s.inclusion).is_iso());
}

TEST_CASE("radical, top and socle") {
  for (const auto& f : testing_support::property_fixtures()) {
    for (std::size_t v = 0; v < f.algebra->vertex_count(); ++v) {
      const auto s = simple(f.algebra, v);
      const auto fp = filtration_parts(s);
      CHECK(fp.radical.is_zero());
      CHECK(is_isomorphic(fp.top, s));
      CHECK(is_isomorphic(fp.socle, s));
    }
    // Uniserial modules have simple top and simple socle.
    for (const auto& obj : f.universe.objects) {
      const auto top = top_multiplicities(obj.module);
      const auto soc = socle_multiplicities(obj.module);
      CHECK(std::accumulate(top.begin(), top.end(), std::size_t{0}) == 1);
      CHECK(std::accumulate(soc.begin(), soc.end(), std::size_t{0}) == 1);
    }
  }
  const auto& e = fixture("E39(4)");
  const auto fp = filtration_parts(proj(e.algebra, 3));
  CHECK(is_isomorphic(fp.top, simple(e.algebra, 3)));
  CHECK(is_isomorphic(fp.radical, named(e, "M2:3")));
  CHECK(compose(fp.top_projection, fp.radical_inclusion).is_zero());
}

TEST_CASE("projective covers and injective envelopes") {
  const auto& e = fixture("E39(4)");
  for (std::size_t v = 0; v < 4; ++v) CHECK(cover_envelope(proj(e.algebra, v), CoverSide::projective_cover).is_iso());
  const auto env = cover_envelope(proj(e.algebra, 0), CoverSide::injective_envelope);
  CHECK(env.is_mono());
  CHECK(is_isomorphic(env.target(), named(e, "M1:3")));
  const auto cov = projective_cover(named(e, "M3:4"));
  CHECK(cov.summand_vertices == std::vector<std::size_t>{3});
  CHECK(cov.map.is_epi());
  CHECK(is_isomorphic(morphism_parts(cov.map).kernel, simple(e.algebra, 1)));
  CHECK_THROWS_AS((void)cover_envelope(Representation::zero(e.algebra), CoverSide::projective_cover),
                  std::invalid_argument);
  // Kernels of covers lie in the radical; cokernels of envelopes have no
  // injective summand split off.
  for (const auto& obj : e.universe.objects) {
    const auto c = projective_cover(obj.module);
    CHECK(top_multiplicities(c.map.source()) == top_multiplicities(obj.module));
    const auto i = injective_envelope(obj.module);
    CHECK(socle_multiplicities(i.map.target()) == socle_multiplicities(obj.module));
  }
}

TEST_CASE("minimal versions") {
  const auto& e = fixture("E39(4)");
  const auto id = Morphism::identity(named(e, "M2:4"));
  CHECK(minimal_version(id, Side::right).discarded.is_zero());
  CHECK(is_minimal(id, Side::left));
  CHECK(is_minimal(id, Side::right));
  CHECK_FALSE(is_minimal(Morphism::zero(named(e, "M1:2"), named(e, "M2:2")), Side::right));
  const auto cov = projective_cover(named(e, "M3:4")).map;
  CHECK(is_minimal(cov, Side::right));

  const auto& a2 = fixture("A2");
  const Representation ps[] = {proj(a2.algebra, 0), proj(a2.algebra, 1)};
  const auto sum = direct_sum_with_maps(a2.algebra, ps);
  const auto s2 = simple(a2.algebra, 1);
  const Morphism comps[] = {Morphism::zero(ps[0], s2), projective_cover(s2).map};
  const auto f = copair(sum, comps, s2);
  const auto mv = minimal_version(f, Side::right);
  CHECK(is_isomorphic(mv.discarded, proj(a2.algebra, 0)));
  CHECK(is_isomorphic(mv.reduced.source(), proj(a2.algebra, 1)));
  CHECK(is_minimal(mv.reduced, Side::right));

  // Universal map from the trivial subcategory onto S(2).
  const auto c = trivial_candidate(e.algebra);
  const auto target = simple(e.algebra, 1);
  std::vector<Representation> summands;
  std::vector<Morphism> components;
  for (const auto& obj : c.objects)
    for (const auto& g : hom_basis(obj.module, target)) {
      summands.push_back(obj.module);
      components.push_back(g);
    }
  const auto universal = copair(direct_sum_with_maps(e.algebra, summands), components, target);
  const auto reduced = minimal_version(universal, Side::right).reduced;
  CHECK(is_isomorphic(reduced.source(), named(e, "M1:2")));
  const auto fast = right_minimal_from_summands(summands, components, target);
  CHECK(is_isomorphic(fast.reduced.source(), named(e, "M1:2")));
}

TEST_CASE("pushout") {
  const auto& a2 = fixture("A2");
  const auto cover = projective_cover(simple(a2.algebra, 1)).map;
  const auto incl = morphism_parts(cover).kernel_inclusion;
  // Pushout of S1 -> P2 along S1 -> S1 is P2 again.
  const auto po = pushout(incl, Morphism::identity(incl.source()));
  CHECK(is_isomorphic(po.object, proj(a2.algebra, 1)));
  CHECK(compose(po.from_first, incl).flatten() == compose(po.from_second, Morphism::identity(incl.source())).flatten());
}
