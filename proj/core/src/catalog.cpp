#include "qhom/catalog.hpp"

#include <algorithm>

#include "qhom/errors.hpp"

namespace qhom {

std::optional<std::size_t> Universe::find(const Representation& m, std::uint64_t seed) const {
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (is_isomorphic(objects[k].module, m, seed)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_name(std::string_view name) const {
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (objects[k].name == name) return k;
  }
  return std::nullopt;
}

Representation uniserial_quotient(const AlgebraPtr& a, std::size_t v, std::size_t k) {
  const auto& q = a->quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<Path>> kept(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto& p : a->paths_between(v, w))
      if (p.length() < k) kept[w].push_back(p);
  }
  std::vector<std::size_t> dims;
  for (const auto& ps : kept) dims.push_back(ps.size());
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    const auto& from = kept[arr.source];
    const auto& to = kept[arr.target];
    Matrix m(to.size(), from.size(), a->field());
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path ext{v, arr.target, {ai}};
      ext.arrows.insert(ext.arrows.end(), from[c].arrows.begin(), from[c].arrows.end());
      auto it = std::find(to.begin(), to.end(), ext);
      if (it != to.end()) m(static_cast<std::size_t>(it - to.begin()), c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return make_unchecked(a, std::move(dims), std::move(maps));
}

std::string uniserial_name(const BoundAlgebra& a, std::size_t top, std::size_t length) {
  const auto& q = a.quiver();
  std::size_t soc = top;
  for (std::size_t step = 1; step < length; ++step) {
    auto it = std::find_if(q.arrows().begin(), q.arrows().end(), [&](const Arrow& x) { return x.source == soc; });
    if (it == q.arrows().end()) throw std::invalid_argument("uniserial_name: no such uniserial module");
    soc = it->target;
  }
  std::string name = "M" + q.label(soc) + ":" + q.label(top);
  if (length > a.vertex_count()) name += "/" + std::to_string(length);
  return name;
}

Universe enumerate_indecomposables(const AlgebraPtr& a) {
  Universe u{a, {}, false};
  if (!is_nakayama(*a)) return u;
  const std::size_t n = a->vertex_count();
  std::vector<std::size_t> loewy(n, 0);
  for (const auto& p : a->basis()) loewy[p.source] = std::max(loewy[p.source], p.length() + 1);
  const std::size_t longest = *std::max_element(loewy.begin(), loewy.end());
  for (std::size_t k = 1; k <= longest; ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      if (k > loewy[v]) continue;
      u.objects.push_back({uniserial_name(*a, v, k), uniserial_quotient(a, v, k)});
    }
  }
  u.complete = true;
  return u;
}

std::vector<std::vector<std::size_t>> hom_table(const Universe& u) {
  std::vector<std::vector<std::size_t>> t(u.size(), std::vector<std::size_t>(u.size(), 0));
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y) t[x][y] = hom_dimension(u.objects[x].module, u.objects[y].module);
  return t;
}

std::vector<std::vector<bool>> reaches(const Universe& u) {
  if (!u.complete) throw UnsupportedError("reaches: universe is not complete");
  const auto hom = hom_table(u);
  const std::size_t n = u.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    r[x][x] = true;
    for (std::size_t y = 0; y < n; ++y)
      if (hom[x][y] > 0) r[x][y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (r[x][k])
        for (std::size_t y = 0; y < n; ++y)
          if (r[k][y]) r[x][y] = true;
  return r;
}

std::vector<std::size_t> r_lambda(const Universe& u, std::size_t cap) {
  const auto r = reaches(u);
  std::vector<bool> small_id;
  for (const auto& obj : u.objects) {
    const auto id = injective_dimension(obj.module, cap);
    small_id.push_back(id.finite() && *id.value <= 1);
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < u.size() && ok; ++y)
      if (r[x][y] && !small_id[y]) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<UniverseRow> describe_universe(const Universe& u, std::size_t cap) {
  std::vector<UniverseRow> rows;
  for (const auto& obj : u.objects) {
    UniverseRow row{obj.name, obj.module.dims(), projective_dimension(obj.module, cap),
                    injective_dimension(obj.module, cap)};
    row.projective = row.pd == Dimension::exact(0);
    row.injective = row.id == Dimension::exact(0);
    rows.push_back(std::move(row));
  }
  return rows;
}

SubcategorySet as_subcategory(const Universe& u, const std::vector<std::size_t>& indices) {
  SubcategorySet c{u.algebra, {}};
  for (auto k : indices) c.objects.push_back(u.objects.at(k));
  return c;
}

SubcategorySet with_universe_names(const SubcategorySet& c, const Universe& u, std::uint64_t seed) {
  SubcategorySet out = c;
  for (auto& obj : out.objects) {
    if (auto k = u.find(obj.module, seed)) obj.name = u.objects[*k].name;
  }
  return out;
}

}  // namespace qhom
