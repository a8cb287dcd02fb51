#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qhom/catalog.hpp"
#include "qhom/homology.hpp"
#include "support.hpp"

using namespace qhom;
using oracle::Interval;
using oracle::LinearNakayama;

namespace {

std::string interval_name(Interval x) { return "M" + std::to_string(x.socle) + ":" + std::to_string(x.top); }

Representation object(const Universe& u, Interval x) {
  const auto k = u.find_name(interval_name(x));
  REQUIRE(k.has_value());
  return u.objects[*k].module;
}

std::vector<std::vector<std::size_t>> relation_words(const BoundAlgebra& a) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& r : a.relations()) out.push_back(r.arrows);
  return out;
}

void compare_with_intervals(const AlgebraPtr& a, const LinearNakayama& l) {
  const auto u = enumerate_indecomposables(a);
  const auto cap = default_cap(*a);
  const auto ind = l.indecomposables();
  REQUIRE(ind.size() == u.size());
  for (std::size_t k = 0; k < ind.size(); ++k) CHECK(u.objects[k].name == interval_name(ind[k]));
  for (auto x : ind) {
    CAPTURE(interval_name(x));
    const auto m = object(u, x);
    CHECK(projective_dimension(m, cap) == Dimension::exact(static_cast<std::size_t>(l.pd(x))));
    CHECK(injective_dimension(m, cap) == Dimension::exact(static_cast<std::size_t>(l.id(x))));
    const auto pm = minimal_resolution(m, ResolutionKind::projective, cap);
    for (auto y : ind) {
      CAPTURE(interval_name(y));
      const auto n = object(u, y);
      CHECK(hom_dimension(m, n) == static_cast<std::size_t>(l.hom(x, y)));
      for (int i = 1; i <= 2; ++i) CHECK(ext_dim(pm, n, i) == static_cast<std::size_t>(l.ext(x, y, i)));
    }
  }
}

}  // namespace

TEST_CASE("path bases agree with brute-force word enumeration") {
  std::vector<AlgebraPtr> algebras = {testing_support::a2(), testing_support::cyc2(), make_cyclic_nakayama(3, 4),
                                      make_linear_algebra(5), load_algebra(QHOM_FIXTURES_DIR "/a2_doubled.toml")};
  for (std::size_t n = 4; n <= 9; ++n) algebras.push_back(testing_support::e39(n));
  for (const auto& a : algebras) {
    const auto words = oracle::surviving_words(a->quiver(), relation_words(*a), 32);
    REQUIRE(words.has_value());
    std::vector<oracle::Word> basis;
    for (const auto& p : a->basis()) basis.push_back({p.source, p.target, p.arrows});
    std::sort(basis.begin(), basis.end());
    CHECK(basis == *words);
  }
  CHECK_FALSE(oracle::surviving_words(testing_support::cyc2()->quiver(), {}, 10).has_value());
}

TEST_CASE("interval calculus: projectives, injectives and syzygies") {
  const auto l = LinearNakayama::example(4);
  CHECK(l.projective(4) == Interval{2, 4});
  CHECK(l.projective(3) == Interval{1, 3});
  CHECK(l.injective(1) == Interval{1, 3});
  CHECK(l.injective(3) == Interval{3, 4});
  CHECK(l.syzygy({4, 4}) == std::optional<Interval>(Interval{2, 3}));
  CHECK_FALSE(l.syzygy({1, 2}).has_value());
  CHECK(l.cosyzygy({1, 1}) == std::optional<Interval>(Interval{2, 3}));
  CHECK(l.indecomposables().size() == 9);
  CHECK(LinearNakayama::hereditary(4).indecomposables().size() == 10);
  CHECK(l.hom({1, 2}, {2, 3}) == 1);
  CHECK(l.hom({2, 3}, {1, 2}) == 0);
  CHECK(l.ext({4, 4}, {1, 1}, 2) == 1);
}

TEST_CASE("library matches the interval calculus on linear examples") {
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    compare_with_intervals(testing_support::e39(static_cast<std::size_t>(n)), LinearNakayama::example(n));
  }
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    compare_with_intervals(make_linear_algebra(static_cast<std::size_t>(n)), LinearNakayama::hereditary(n));
  }
}

TEST_CASE("independent intertwiner solver matches hom_dimension") {
  std::mt19937_64 rng(0x0ac1e);
  for (const auto& f : testing_support::property_fixtures()) {
    CAPTURE(f.name);
    for (const auto& x : f.universe.objects)
      for (const auto& y : f.universe.objects)
        CHECK(oracle::hom_dimension(x.module, y.module) == hom_dimension(x.module, y.module));
    for (int k = 0; k < 20; ++k) {
      const auto m = testing_support::random_module(f, rng, 3).module;
      const auto n = testing_support::random_module(f, rng, 3).module;
      CHECK(oracle::hom_dimension(m, n) == hom_dimension(m, n));
    }
  }
}

TEST_CASE("exhaustive enumeration over F_2") {
  for (std::size_t n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const auto a = make_example_algebra(n, 2);
    const auto u = enumerate_indecomposables(a);
    for (const auto& x : u.objects) {
      const auto mx = random_basis_change(x.module, 11).target();
      for (const auto& y : u.objects) {
        CAPTURE(x.name);
        CAPTURE(y.name);
        const auto e = oracle::hom_dimension_f2_exhaustive(mx, y.module);
        CHECK(e == oracle::hom_dimension(mx, y.module));
        CHECK(e == hom_dimension(mx, y.module));
      }
    }
  }
  const auto a = make_example_algebra(4, 2);
  const std::size_t twice[] = {0, 1, 2, 3, 0, 1, 2, 3};
  const auto big = standard_sum(a, StandardKind::projective, twice);
  CHECK_THROWS((void)oracle::hom_dimension_f2_exhaustive(big, big));
  const auto s1 = standard_module(testing_support::a2(), StandardKind::simple, 0);
  CHECK_THROWS((void)oracle::hom_dimension_f2_exhaustive(s1, s1));
}
