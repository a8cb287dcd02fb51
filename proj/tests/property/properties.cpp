#include "properties.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "qhom/approx.hpp"
#include "qhom/errors.hpp"
#include "support.hpp"

namespace properties {

using namespace qhom;
using testing_support::Fixture;

namespace {

struct Verdict {
  enum Kind { pass, fail, skip } kind = pass;
  std::string why;
};

Verdict failed(std::string why) { return {Verdict::fail, std::move(why)}; }
Verdict skipped() { return {Verdict::skip, {}}; }

using Body = std::function<Verdict(const Fixture&, std::mt19937_64&)>;

Outcome run(std::string name, std::size_t count, std::uint64_t seed, const std::vector<const Fixture*>& fixtures,
            const Body& body) {
  Outcome out;
  out.name = std::move(name);
  const std::size_t max_draws = 20 * count;
  for (std::size_t draw = 0; draw < max_draws && out.instances < count; ++draw) {
    const Fixture& f = *fixtures[draw % fixtures.size()];
    std::mt19937_64 rng(seed + draw);
    Verdict v;
    try {
      v = body(f, rng);
    } catch (const std::exception& e) {
      v = failed(std::string("exception: ") + e.what());
    }
    if (v.kind == Verdict::skip) continue;
    ++out.instances;
    if (v.kind == Verdict::fail) {
      if (out.failures++ == 0) out.first_failure = f.name + " draw " + std::to_string(draw) + ": " + v.why;
    }
  }
  return out;
}

std::vector<const Fixture*> all_fixtures() {
  std::vector<const Fixture*> v;
  for (const auto& f : testing_support::property_fixtures()) v.push_back(&f);
  return v;
}

std::vector<const Fixture*> finite_gl_dim_fixtures() {
  std::vector<const Fixture*> v;
  for (const auto& f : testing_support::property_fixtures())
    if (f.name != "CYC2") v.push_back(&f);
  return v;
}

std::string dims(const Representation& m) {
  std::ostringstream s;
  s << "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) s << (v ? "," : "") << m.dims()[v];
  s << ")";
  return s.str();
}

std::string pair_text(const Representation& m, const Representation& n, std::size_t i) {
  return "M=" + dims(m) + " N=" + dims(n) + " i=" + std::to_string(i);
}

}  // namespace

std::string Outcome::summary() const {
  std::ostringstream s;
  s << name << ": " << instances << " instances, " << failures << " failures";
  if (!first_failure.empty()) s << " (first: " << first_failure << ")";
  return s.str();
}

Outcome ext_route_agreement(std::size_t instances, std::uint64_t seed) {
  return run("Ext route agreement", instances, seed, all_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto m = testing_support::random_module(f, rng, 2).module;
    const auto n = testing_support::random_module(f, rng, 2).module;
    const std::size_t i = rng() % 4;
    const auto p = ext_dim(m, n, i, f.cap);
    const auto q = ext_dim_via_injective(m, n, i, f.cap);
    if (p != q)
      return failed(pair_text(m, n, i) + " projective " + std::to_string(p) + " injective " + std::to_string(q));
    return Verdict{};
  });
}

Outcome duality(std::size_t instances, std::uint64_t seed) {
  return run("duality", instances, seed, all_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto m = testing_support::random_module(f, rng, 2).module;
    const auto n = testing_support::random_module(f, rng, 2).module;
    const std::size_t i = rng() % 4;
    const auto dm = qhom::duality(m);
    const auto dn = qhom::duality(n);
    if (!(projective_dimension(m, f.cap) == injective_dimension(dm, f.cap)))
      return failed("pd M != id DM for " + dims(m));
    if (!(injective_dimension(m, f.cap) == projective_dimension(dm, f.cap)))
      return failed("id M != pd DM for " + dims(m));
    if (ext_dim(m, n, i, f.cap) != ext_dim(dn, dm, i, f.cap)) return failed("Ext transposition " + pair_text(m, n, i));
    if (hom_dimension(m, n) != hom_dimension(dn, dm)) return failed("Hom transposition " + pair_text(m, n, 0));
    return Verdict{};
  });
}

Outcome euler_identity(std::size_t instances, std::uint64_t seed) {
  return run("Euler identity", instances, seed, finite_gl_dim_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto m = testing_support::random_module(f, rng, 3).module;
    const auto n = testing_support::random_module(f, rng, 3).module;
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.algebra->vertex_count(); ++i) {
      const auto e = static_cast<std::int64_t>(ext_dim(m, n, i, f.cap));
      chi += i % 2 == 0 ? e : -e;
    }
    const auto form = euler_form(*f.algebra, m.dims(), n.dims());
    if (chi != form)
      return failed(pair_text(m, n, 0) + " alternating sum " + std::to_string(chi) + " form " + std::to_string(form));
    return Verdict{};
  });
}

Outcome krull_schmidt(std::size_t instances, std::uint64_t seed) {
  return run("Krull-Schmidt", instances, seed, all_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto rm = testing_support::random_module(f, rng, 3);
    std::vector<std::size_t> found;
    for (const auto& part : decompose(rm.module, rng())) {
      const auto k = f.universe.find(part);
      if (!k) return failed("summand " + dims(part) + " is not a universe object");
      found.push_back(*k);
    }
    std::sort(found.begin(), found.end());
    if (found != rm.parts) return failed("summands differ for " + dims(rm.module));
    return Verdict{};
  });
}

Outcome wakamatsu(std::size_t instances, std::uint64_t seed) {
  return run("Wakamatsu", instances, seed, all_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto c = trivial_candidate(f.algebra);
    const auto m = testing_support::random_module(f, rng, 2).module;
    const auto side = rng() % 2 == 0 ? Side::left : Side::right;
    const auto a = minimal_approximation(c, m, side, rng());
    if (!is_approximation(a, c, side)) return failed("not an approximation of " + dims(m));
    const auto parts = morphism_parts(a);
    for (const auto& obj : c.objects) {
      const auto e = side == Side::left ? ext_dim(parts.cokernel, obj.module, 1, f.cap)
                                        : ext_dim(obj.module, parts.kernel, 1, f.cap);
      if (e != 0) {
        return failed(std::string(side == Side::left ? "Ext^1(Z, " : "Ext^1(") + obj.name +
                      (side == Side::left ? ") != 0" : ", K) != 0") + " for M=" + dims(m));
      }
    }
    return Verdict{};
  });
}

Outcome extension_minimality(std::size_t instances, std::uint64_t seed) {
  return run("minimality of extension maps", instances, seed, all_fixtures(),
             [](const Fixture& f, std::mt19937_64& rng) {
               // Even draws: C indecomposable, so g is left minimal. Odd draws: A
               // indecomposable, so f is right minimal.
               const bool left = rng() % 2 == 0;
               const auto one = testing_support::random_module(f, rng, 1).module;
               const auto many = testing_support::random_module(f, rng, 2).module;
               const auto& a = left ? many : one;
               const auto& c = left ? one : many;
               const auto e = testing_support::nonsplit_extension(a, c, rng);
               if (!e) return skipped();
               if (!testing_support::is_short_exact(*e)) return failed("constructed sequence is not exact");
               if (left && !is_minimal(e->g, Side::left, rng()))
                 return failed("g not left minimal, A=" + dims(a) + " C=" + dims(c));
               if (!left && !is_minimal(e->f, Side::right, rng()))
                 return failed("f not right minimal, A=" + dims(a) + " C=" + dims(c));
               return Verdict{};
             });
}

Outcome minimal_extension_ext(std::size_t instances, std::uint64_t seed) {
  return run("Ext^1 at summands of minimal extensions", instances, seed, all_fixtures(),
             [](const Fixture& f, std::mt19937_64& rng) {
               const auto a = testing_support::random_module(f, rng, 2).module;
               const auto c = testing_support::random_module(f, rng, 2).module;
               const auto e = testing_support::nonsplit_extension(a, c, rng);
               if (!e) return skipped();
               const bool g_min = is_minimal(e->g, Side::left, rng());
               const bool f_min = is_minimal(e->f, Side::right, rng());
               if (!g_min && !f_min) return skipped();
               if (g_min) {
                 for (const auto& part : decompose(c))
                   if (ext_dim(part, a, 1, f.cap) == 0) return failed("g left minimal but Ext^1(C', A) = 0");
               }
               if (f_min) {
                 for (const auto& part : decompose(a))
                   if (ext_dim(c, part, 1, f.cap) == 0) return failed("f right minimal but Ext^1(C, A') = 0");
               }
               return Verdict{};
             });
}

Outcome minimal_components(std::size_t instances, std::uint64_t seed) {
  return run("components of minimal maps", instances, seed, all_fixtures(), [](const Fixture& f, std::mt19937_64& rng) {
    const auto c = trivial_candidate(f.algebra);
    const auto m = testing_support::random_module(f, rng, 3).module;
    const auto side = rng() % 2 == 0 ? Side::left : Side::right;
    const auto a = minimal_approximation(c, m, side, rng());
    if (!is_minimal(a, side, rng())) return failed("minimal approximation is not minimal for " + dims(m));
    if (side == Side::left) {
      for (const auto& s : decompose_with_maps(a.target(), rng()))
        if (compose(s.projection, a).is_zero()) return failed("zero component into " + dims(s.module));
    } else {
      for (const auto& s : decompose_with_maps(a.source(), rng()))
        if (compose(a, s.inclusion).is_zero()) return failed("zero component from " + dims(s.module));
    }
    return Verdict{};
  });
}

}  // namespace properties
