#include "qhom/approx.hpp"

#include <stdexcept>

#include "qhom/homology.hpp"

namespace qhom {

std::optional<std::size_t> SubcategorySet::find(const Representation& m, std::uint64_t seed) const {
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (is_isomorphic(objects[k].module, m, seed)) return k;
  }
  return std::nullopt;
}

bool SubcategorySet::contains_sum(const Representation& m, std::uint64_t seed) const {
  for (const auto& part : decompose(m, seed)) {
    if (!find(part, seed)) return false;
  }
  return true;
}

SubcategorySet trivial_candidate(const AlgebraPtr& a, std::uint64_t seed) {
  SubcategorySet c{a, {}};
  const auto& labels = a->quiver().vertices();
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    c.objects.push_back({"P" + labels[v], standard_module(a, StandardKind::projective, v)});
  }
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    auto inj = standard_module(a, StandardKind::injective, v);
    if (!c.find(inj, seed)) c.objects.push_back({"I" + labels[v], std::move(inj)});
  }
  return c;
}

namespace {

// Rank of the linear map Hom(X, Y) -> Hom(X', Y') given by `apply` on basis
// elements.
template <typename Apply>
std::size_t induced_rank(const HomSpace& from, std::size_t target_size, PrimeField f, Apply apply) {
  Matrix m(target_size, from.dimension(), f);
  for (std::size_t k = 0; k < from.dimension(); ++k) {
    const auto flat = apply(from.element(k)).flatten();
    for (std::size_t r = 0; r < flat.size(); ++r) m(r, k) = flat[r];
  }
  return rank(m);
}

}  // namespace

bool is_approximation(const Morphism& f, const SubcategorySet& c, Side side, std::uint64_t seed) {
  const PrimeField field = f.source().field();
  if (side == Side::right) {
    if (!c.contains_sum(f.source(), seed)) throw std::invalid_argument("is_approximation: source not in add C");
    for (const auto& obj : c.objects) {
      HomSpace from(obj.module, f.source());
      HomSpace to(obj.module, f.target());
      const auto r =
          induced_rank(from, to.basis_matrix().rows(), field, [&](const Morphism& g) { return compose(f, g); });
      if (r != to.dimension()) return false;
    }
    return true;
  }
  if (!c.contains_sum(f.target(), seed)) throw std::invalid_argument("is_approximation: target not in add C");
  for (const auto& obj : c.objects) {
    HomSpace from(f.target(), obj.module);
    HomSpace to(f.source(), obj.module);
    const auto r =
        induced_rank(from, to.basis_matrix().rows(), field, [&](const Morphism& g) { return compose(g, f); });
    if (r != to.dimension()) return false;
  }
  return true;
}

Morphism minimal_approximation(const SubcategorySet& c, const Representation& m, Side side, std::uint64_t seed) {
  if (side == Side::left) {
    SubcategorySet dual{m.algebra()->opposite(), {}};
    for (const auto& obj : c.objects) dual.objects.push_back({obj.name, duality(obj.module)});
    const auto right = minimal_approximation(dual, duality(m), Side::right, seed);
    const auto back = duality(right);
    return Morphism::unchecked(m, back.target(), back.blocks());
  }
  std::vector<Representation> summands;
  std::vector<Morphism> components;
  for (const auto& obj : c.objects) {
    for (auto& h : hom_basis(obj.module, m)) {
      summands.push_back(obj.module);
      components.push_back(std::move(h));
    }
  }
  (void)seed;
  return right_minimal_from_summands(summands, components, m).reduced;
}

std::vector<std::size_t> perp(const SubcategorySet& c, std::size_t n, Side side,
                              const std::vector<NamedModule>& universe, std::size_t cap) {
  std::vector<bool> keep(universe.size(), true);
  if (side == Side::left) {
    for (std::size_t x = 0; x < universe.size(); ++x) {
      const auto res = minimal_resolution(universe[x].module, ResolutionKind::projective, cap);
      for (std::size_t k = 0; k < c.objects.size() && keep[x]; ++k) {
        for (std::size_t i = 1; i <= n && keep[x]; ++i) {
          if (ext_dim(res, c.objects[k].module, i) != 0) keep[x] = false;
        }
      }
    }
  } else {
    for (const auto& obj : c.objects) {
      const auto res = minimal_resolution(obj.module, ResolutionKind::projective, cap);
      for (std::size_t x = 0; x < universe.size(); ++x) {
        for (std::size_t i = 1; i <= n && keep[x]; ++i) {
          if (ext_dim(res, universe[x].module, i) != 0) keep[x] = false;
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < universe.size(); ++x)
    if (keep[x]) out.push_back(x);
  return out;
}

std::string OrthogonalityWitness::describe() const {
  const char* dir = direction == Side::left ? "left" : "right";
  if (degree && partner) {
    const std::string& a = direction == Side::right ? *partner : module;
    const std::string& b = direction == Side::right ? module : *partner;
    return "Ext^" + std::to_string(*degree) + "(" + a + ", " + b + ") != 0; " + module + " is not in the " + dir +
           " perp";
  }
  return module + " lies in the " + dir + " perp but not in the subcategory";
}

namespace {

std::optional<OrthogonalityWitness> direction_witness(const SubcategorySet& c, std::size_t n, Side side,
                                                      const std::vector<NamedModule>& universe, std::size_t cap,
                                                      std::uint64_t seed) {
  // Objects of C must be orthogonal to C.
  std::vector<Resolution> c_res;
  for (const auto& obj : c.objects) c_res.push_back(minimal_resolution(obj.module, ResolutionKind::projective, cap));
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < c.objects.size(); ++k) {
        const std::size_t e =
            side == Side::right ? ext_dim(c_res[k], c.objects[x].module, i) : ext_dim(c_res[x], c.objects[k].module, i);
        if (e != 0) return OrthogonalityWitness{c.objects[x].name, side, i, c.objects[k].name};
      }
    }
  }
  // Nothing outside C may be orthogonal to C.
  for (auto x : perp(c, n, side, universe, cap)) {
    if (!c.find(universe[x].module, seed))
      return OrthogonalityWitness{universe[x].name, side, std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

MaximalityResult is_maximal_orthogonal(const SubcategorySet& c, std::size_t n, const std::vector<NamedModule>& universe,
                                       bool complete, std::size_t cap, std::uint64_t seed) {
  MaximalityResult out;
  out.complete = complete;
  for (Side side : {Side::right, Side::left}) {
    if (auto w = direction_witness(c, n, side, universe, cap, seed)) {
      out.witness = std::move(w);
      return out;
    }
  }
  out.maximal = true;
  return out;
}

}  // namespace qhom
