#include <doctest.h>

#include <algorithm>

#include "qhom/catalog.hpp"
#include "qhom/errors.hpp"
#include "support.hpp"

using namespace qhom;
using testing_support::fixture;

namespace {

std::vector<std::string> names(const Universe& u) {
  std::vector<std::string> out;
  for (const auto& o : u.objects) out.push_back(o.name);
  return out;
}

std::size_t index(const Universe& u, const std::string& name) { return *u.find_name(name); }

}  // namespace

TEST_CASE("enumeration of indecomposables") {
  CHECK(names(fixture("A2").universe) == std::vector<std::string>{"M1:1", "M2:2", "M1:2"});
  const auto& e = fixture("E39(4)").universe;
  CHECK(e.complete);
  CHECK(names(e) == std::vector<std::string>{"M1:1", "M2:2", "M3:3", "M4:4", "M1:2", "M2:3", "M3:4", "M1:3", "M2:4"});
  for (std::size_t n = 4; n <= 12; ++n)
    CHECK(enumerate_indecomposables(testing_support::e39(n)).size() == n * (n + 1) / 2 - 1);
  CHECK(names(fixture("CYC2").universe) == std::vector<std::string>{"M1:1", "M2:2", "M2:1", "M1:2"});
  const auto kronecker = load_algebra(QHOM_FIXTURES_DIR "/a2_doubled.toml");
  const auto u = enumerate_indecomposables(kronecker);
  CHECK_FALSE(u.complete);
  CHECK(u.size() == 0);
  CHECK_THROWS_AS((void)reaches(u), UnsupportedError);
  // Objects are pairwise non-isomorphic and indecomposable.
  for (std::size_t x = 0; x < e.size(); ++x) {
    CHECK(is_indecomposable(e.objects[x].module));
    for (std::size_t y = x + 1; y < e.size(); ++y) CHECK_FALSE(is_isomorphic(e.objects[x].module, e.objects[y].module));
  }
}

TEST_CASE("long uniserials on a cycle") {
  const auto a = make_cyclic_nakayama(2, 3);
  const auto u = enumerate_indecomposables(a);
  CHECK(names(u) == std::vector<std::string>{"M1:1", "M2:2", "M2:1", "M1:2", "M1:1/3", "M2:2/3"});
  CHECK(u.objects[4].module.dims() == std::vector<std::size_t>{2, 1});
  CHECK(uniserial_name(*a, 0, 3) == "M1:1/3");
  CHECK(uniserial_quotient(a, 0, 3) == standard_module(a, StandardKind::projective, 0));
}

TEST_CASE("reachability") {
  const auto& e = fixture("E39(4)").universe;
  const auto r = reaches(e);
  for (std::size_t x = 0; x < e.size(); ++x) CHECK(r[x][x]);
  const auto i3 = index(e, "M3:4");
  std::vector<std::string> from_i3;
  for (std::size_t y = 0; y < e.size(); ++y)
    if (r[i3][y]) from_i3.push_back(e.objects[y].name);
  CHECK(from_i3 == std::vector<std::string>{"M4:4", "M3:4"});
  // Transitively closed.
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = 0; y < e.size(); ++y)
      for (std::size_t z = 0; z < e.size(); ++z)
        if (r[x][y] && r[y][z]) CHECK(r[x][z]);

  // Over A2 nothing nonzero leaves the top simple.
  const auto& a = fixture("A2").universe;
  const auto ra = reaches(a);
  const auto s2 = index(a, "M2:2");
  CHECK(ra[s2] == std::vector<bool>{false, true, false});
  CHECK(ra[index(a, "M1:2")] == std::vector<bool>{false, true, true});
  CHECK(ra[index(a, "M1:1")] == std::vector<bool>{true, true, true});
}

TEST_CASE("modules whose successors have id at most one") {
  const auto& f = fixture("E39(4)");
  const auto r = r_lambda(f.universe, f.cap);
  for (const auto& name : {"M1:3", "M2:4", "M3:4", "M4:4"})
    CHECK(std::find(r.begin(), r.end(), index(f.universe, name)) != r.end());
  CHECK(std::find(r.begin(), r.end(), index(f.universe, "M1:1")) == r.end());
  const auto& a = fixture("A2");
  CHECK(r_lambda(a.universe, a.cap).size() == a.universe.size());
  // Truncated id counts as large.
  const auto& c = fixture("CYC2");
  const auto rc = r_lambda(c.universe, c.cap);
  CHECK(std::find(rc.begin(), rc.end(), index(c.universe, "M1:1")) == rc.end());
}

TEST_CASE("universe rows") {
  const auto& f = fixture("E39(4)");
  const auto rows = describe_universe(f.universe, f.cap);
  REQUIRE(rows.size() == 9);
  CHECK(rows[7].name == "M1:3");
  CHECK(rows[7].projective);
  CHECK(rows[7].injective);
  CHECK(rows[3].name == "M4:4");
  CHECK(rows[3].pd == Dimension::exact(2));
  CHECK(rows[3].injective);
  CHECK_FALSE(rows[3].projective);
}

TEST_CASE("hom table shape") {
  const auto& f = fixture("E39(4)");
  const auto t = hom_table(f.universe);
  REQUIRE(t.size() == 9);
  for (std::size_t x = 0; x < 9; ++x) CHECK(t[x][x] == 1);
}
