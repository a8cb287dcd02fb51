#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qhom/errors.hpp"
#include "qhom/io.hpp"
#include "support.hpp"

using namespace qhom;
using testing_support::fixture;
using testing_support::named;

TEST_CASE("module names") {
  const auto& e = fixture("E39(4)");
  const auto p3 = parse_module(e.algebra, "P3", e.universe);
  CHECK(p3.name == "P3");
  CHECK(p3.module.dims() == std::vector<std::size_t>{1, 1, 1, 0});
  CHECK(is_isomorphic(parse_module(e.algebra, "I2", e.universe).module, named(e, "M2:4")));
  CHECK(is_isomorphic(parse_module(e.algebra, "S3", e.universe).module, named(e, "M3:3")));
  CHECK(parse_module(e.algebra, "M2:3", e.universe).module.dims() == std::vector<std::size_t>{0, 1, 1, 0});

  CHECK_THROWS_AS((void)parse_module(e.algebra, "", e.universe), SpecError);
  CHECK_THROWS_AS((void)parse_module(e.algebra, "P9", e.universe), SpecError);
  CHECK_THROWS_AS((void)parse_module(e.algebra, "Q1", e.universe), SpecError);
  CHECK_THROWS_AS((void)parse_module(e.algebra, "M4:1", e.universe), SpecError);
  CHECK_THROWS_AS((void)parse_module(e.algebra, "@/nonexistent/x.json", e.universe), SpecError);

  const auto doubled = load_algebra(QHOM_FIXTURES_DIR "/a2_doubled.toml");
  const auto empty = enumerate_indecomposables(doubled);
  CHECK_THROWS_AS((void)parse_module(doubled, "M1:1", empty), SpecError);
  CHECK(parse_module(doubled, "P2", empty).module.dims() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("representation json round trip") {
  const auto& e = fixture("E39(4)");
  const auto m = random_basis_change(named(e, "M1:3"), 7).target();
  const auto j = representation_to_json(m);
  CHECK(j["dims"]["2"] == 1);
  CHECK(j["maps"].contains("a2"));
  const auto back = representation_from_json(e.algebra, nlohmann::json::parse(j.dump()));
  CHECK(back.dims() == m.dims());
  for (std::size_t ai = 0; ai < 3; ++ai) CHECK(back.map(ai) == m.map(ai));

  const auto path = std::string("qhom_io_test_module.json");
  {
    std::ofstream out(path);
    out << j.dump();
  }
  const auto loaded = parse_module(e.algebra, "@" + path, e.universe);
  CHECK(loaded.name == "@" + path);
  CHECK(is_isomorphic(loaded.module, named(e, "M1:3")));
  std::remove(path.c_str());
}

TEST_CASE("malformed representations") {
  const auto a = fixture("A2").algebra;
  const auto bad = [&](const char* text) {
    CHECK_THROWS_AS((void)representation_from_json(a, nlohmann::json::parse(text)), SpecError);
  };
  bad("[1, 2]");
  bad(R"({"dims": {"3": 1}})");
  bad(R"({"dims": {"1": -1}})");
  bad(R"({"dims": {"1": 1, "2": 1}, "maps": {"b": [[1]]}})");
  bad(R"({"dims": {"1": 1, "2": 1}, "maps": {"a1": [[1], [1]]}})");
  bad(R"({"dims": {"1": 1, "2": 1}, "maps": {"a1": [[1, 0]]}})");
  bad(R"({"dims": {"1": 1, "2": 1}, "maps": {"a1": [["x"]]}})");

  const auto m =
      representation_from_json(a, nlohmann::json::parse(R"({"dims": {"1": 1, "2": 1}, "maps": {"a1": [[103]]}})"));
  CHECK(m.map(0)(0, 0) == 2);
}

TEST_CASE("subcategory lists") {
  const auto& e = fixture("E39(4)");
  const auto c = parse_subcategory(e.algebra, "# projectives\nP1\n\n  P2  \nM1:3\n", e.universe);
  REQUIRE(c.size() == 3);
  CHECK(c.objects[1].name == "P2");
  CHECK_THROWS_AS((void)parse_subcategory(e.algebra, "P1\nM1:1\n", e.universe), SpecError);
  CHECK_THROWS_AS((void)parse_subcategory(e.algebra, "P9\n", e.universe), SpecError);
  CHECK_THROWS_AS((void)load_subcategory(e.algebra, "/nonexistent/list.txt", e.universe), SpecError);

  const auto& a2 = fixture("A2");
  const auto path = std::string("qhom_io_test_sum.json");
  {
    std::ofstream out(path);
    out << R"({"dims": {"1": 1, "2": 1}})";
  }
  CHECK_THROWS_AS((void)parse_subcategory(a2.algebra, "@" + path + "\n", a2.universe), SpecError);
  std::remove(path.c_str());

  const auto file = load_subcategory(e.algebra, QHOM_FIXTURES_DIR "/e39_4_projectives.txt", e.universe);
  CHECK(file.size() == 4);
}

TEST_CASE("names and printed resolutions") {
  const auto& e = fixture("E39(4)");
  CHECK(format_dims({1, 0, 2}) == "(1,0,2)");
  CHECK(format_term(*e.algebra, 'P', {}) == "0");
  CHECK(format_term(*e.algebra, 'P', {2, 0, 2}) == "P1 ⊕ P3^2");
  CHECK(display_name(named(e, "M2:3"), e.universe) == "M2:3");
  const Universe none{e.algebra, {}, false};
  CHECK(display_name(named(e, "M1:2"), none) == "P2");
  CHECK(display_name(named(e, "M1:3"), none) == "I1");
  CHECK(display_name(named(e, "M2:3"), none) == "(0,1,1,0)");

  const auto s4 = standard_module(e.algebra, StandardKind::simple, 3);
  CHECK(format_resolution(minimal_resolution(s4, ResolutionKind::projective, e.cap), "S4") ==
        "0 → P1 → P3 → P4 → S4 → 0\n"
        "  P_2 = P1  dims (1,0,0,0)\n"
        "  P_1 = P3  dims (1,1,1,0)\n"
        "  P_0 = P4  dims (0,1,1,1)\n"
        "  S4  dims (0,0,0,1)\n");
  const auto s1 = standard_module(e.algebra, StandardKind::simple, 0);
  CHECK(format_resolution(minimal_resolution(s1, ResolutionKind::injective, e.cap), "S1") ==
        "0 → S1 → I1 → I2 → I4 → 0\n"
        "  I^0 = I1  dims (1,1,1,0)\n"
        "  I^1 = I2  dims (0,1,1,1)\n"
        "  I^2 = I4  dims (0,0,0,1)\n"
        "  S1  dims (1,0,0,0)\n");

  const auto& c = fixture("CYC2");
  const auto r = minimal_resolution(standard_module(c.algebra, StandardKind::simple, 0), ResolutionKind::projective, 2);
  CHECK(format_resolution(r, "S1") ==
        "… → P1 → P2 → P1 → S1 → 0\n"
        "  P_2 = P1  dims (1,1)\n"
        "  P_1 = P2  dims (1,1)\n"
        "  P_0 = P1  dims (1,1)\n"
        "  S1  dims (1,0)\n"
        "  truncated at cap 2; dimension ≥ 2\n");
}
