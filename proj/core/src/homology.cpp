#include "qhom/homology.hpp"

#include <algorithm>
#include <boost/rational.hpp>

#include "qhom/errors.hpp"

namespace qhom {

std::string Dimension::str() const {
  if (value) return std::to_string(*value);
  return "≥ " + std::to_string(cap);
}

Dimension max(const Dimension& a, const Dimension& b) {
  if (!a.finite()) return b.finite() ? a : Dimension::at_least(std::max(a.cap, b.cap));
  if (!b.finite()) return b;
  return Dimension::exact(std::max(*a.value, *b.value));
}

std::size_t default_cap(const BoundAlgebra& a) noexcept { return 2 * a.vertex_count() + 2; }

namespace {

// Offset of summand s inside the vertex-w block of a direct sum of P(v).
std::vector<std::vector<std::size_t>> summand_offsets(const BoundAlgebra& a, const std::vector<std::size_t>& vertices) {
  const std::size_t n = a.vertex_count();
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(vertices.size(), 0));
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t acc = 0;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      off[w][s] = acc;
      acc += a.paths_between(vertices[s], w).size();
    }
  }
  return off;
}

// Image of generator t of the source (a sum of projectives) under f, as a
// column in the target at vertex vertices[t].
Matrix generator_image(const Morphism& f, const std::vector<std::size_t>& source_vertices,
                       const std::vector<std::vector<std::size_t>>& source_offsets, std::size_t t) {
  const std::size_t u = source_vertices[t];
  const Matrix& b = f.block(u);
  return b.block(0, source_offsets[u][t], b.rows(), 1);
}

Resolution projective_resolution(const Representation& m, std::size_t cap) {
  Resolution res{ResolutionKind::projective, m, {}, {}, {}, Morphism::zero(m, m), false};
  if (m.is_zero()) return res;
  auto cover = projective_cover(m);
  res.augmentation = cover.map;
  res.terms.push_back(cover.map.source());
  res.term_vertices.push_back(cover.summand_vertices);
  auto parts = morphism_parts(cover.map);
  for (std::size_t k = 1;; ++k) {
    if (parts.kernel.is_zero()) break;
    if (k > cap) {
      res.truncated = true;
      break;
    }
    auto next = projective_cover(parts.kernel);
    res.differentials.push_back(compose(parts.kernel_inclusion, next.map));
    res.terms.push_back(next.map.source());
    res.term_vertices.push_back(next.summand_vertices);
    parts = morphism_parts(next.map);
  }
  return res;
}

Resolution injective_resolution(const Representation& m, std::size_t cap) {
  auto dual = projective_resolution(duality(m), cap);
  Resolution res{
      ResolutionKind::injective, m, {}, std::move(dual.term_vertices), {}, Morphism::zero(m, m), dual.truncated};
  if (m.is_zero()) return res;
  for (const auto& t : dual.terms) res.terms.push_back(duality(t));
  for (const auto& d : dual.differentials) res.differentials.push_back(duality(d));
  res.augmentation = Morphism::unchecked(m, res.terms.front(), duality(dual.augmentation).blocks());
  return res;
}

}  // namespace

Resolution minimal_resolution(const Representation& m, ResolutionKind kind, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("minimal_resolution: cap must be positive");
  return kind == ResolutionKind::projective ? projective_resolution(m, cap) : injective_resolution(m, cap);
}

Dimension homological_dimension(const Representation& m, ResolutionKind kind, std::size_t cap) {
  const auto res = minimal_resolution(m, kind, cap);
  if (res.truncated) return Dimension::at_least(cap);
  return Dimension::exact(res.length());
}

Dimension projective_dimension(const Representation& m, std::size_t cap) {
  return homological_dimension(m, ResolutionKind::projective, cap);
}

Dimension injective_dimension(const Representation& m, std::size_t cap) {
  return homological_dimension(m, ResolutionKind::injective, cap);
}

Dimension global_dimension(const AlgebraPtr& a, std::size_t cap) {
  Dimension out = Dimension::exact(0);
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    out = max(out, projective_dimension(standard_module(a, StandardKind::simple, v), cap));
  }
  return out;
}

Morphism projective_morphism(const Representation& source, const std::vector<std::size_t>& source_vertices,
                             const Representation& target, const std::vector<Matrix>& generator_images) {
  const auto& a = *source.algebra();
  const std::size_t n = a.vertex_count();
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Matrix> cols;
    for (std::size_t s = 0; s < source_vertices.size(); ++s) {
      for (const auto& q : a.paths_between(source_vertices[s], w)) {
        cols.push_back(target.path_action(q) * generator_images[s]);
      }
    }
    blocks.push_back(hstack(cols, target.dim(w), target.field()));
  }
  return Morphism::unchecked(source, target, std::move(blocks));
}

namespace {

// Matrix of Hom(d, N) : Hom(P_k, N) -> Hom(P_{k+1}, N) for d : P_{k+1} -> P_k,
// in the coordinates Hom(sum P(v_s), N) = sum N_{v_s}.
Matrix pulled_back(const Resolution& pm, std::size_t k, const Representation& n) {
  const auto& a = *pm.target.algebra();
  const auto& src_v = pm.term_vertices[k + 1];
  const auto& tgt_v = pm.term_vertices[k];
  const auto src_off = summand_offsets(a, src_v);
  const auto tgt_off = summand_offsets(a, tgt_v);
  const Morphism& d = pm.differentials[k];
  const PrimeField f = n.field();

  std::size_t rows = 0;
  std::size_t cols = 0;
  for (auto u : src_v) rows += n.dim(u);
  for (auto v : tgt_v) cols += n.dim(v);
  Matrix out(rows, cols, f);
  std::size_t r0 = 0;
  for (std::size_t t = 0; t < src_v.size(); ++t) {
    const std::size_t u = src_v[t];
    const Matrix col = generator_image(d, src_v, src_off, t);
    std::size_t c0 = 0;
    for (std::size_t s = 0; s < tgt_v.size(); ++s) {
      const std::size_t v = tgt_v[s];
      const auto& paths = a.paths_between(v, u);
      Matrix acc(n.dim(u), n.dim(v), f);
      for (std::size_t j = 0; j < paths.size(); ++j) {
        const Scalar c = col(tgt_off[u][s] + j, 0);
        if (c != 0) acc = acc + n.path_action(paths[j]).scaled(c);
      }
      out.set_block(r0, c0, acc);
      c0 += n.dim(v);
    }
    r0 += n.dim(u);
  }
  return out;
}

void require_degree(const Resolution& r, std::size_t i) {
  if (r.truncated && i + 1 > r.length()) {
    throw TruncationError("resolution truncated at length " + std::to_string(r.length()) + "; degree " +
                          std::to_string(i) + " needs a longer cap");
  }
}

}  // namespace

std::size_t ext_dim(const Resolution& pm, const Representation& n, std::size_t i) {
  if (pm.kind != ResolutionKind::projective) throw std::invalid_argument("ext_dim: needs a projective resolution");
  require_degree(pm, i);
  if (pm.terms.empty() || i >= pm.terms.size()) return 0;
  std::size_t hom = 0;
  for (auto v : pm.term_vertices[i]) hom += n.dim(v);
  std::size_t out = hom;
  if (i + 1 < pm.terms.size()) out -= rank(pulled_back(pm, i, n));
  if (i >= 1) out -= rank(pulled_back(pm, i - 1, n));
  return out;
}

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i, std::size_t cap) {
  if (!same_algebra(m.algebra(), n.algebra())) throw std::invalid_argument("ext_dim: algebra mismatch");
  return ext_dim(minimal_resolution(m, ResolutionKind::projective, cap), n, i);
}

namespace {

Matrix pushed_forward(const Representation& m, const HomSpace& from, const Morphism& d, std::size_t target_size) {
  Matrix out(target_size, from.dimension(), m.field());
  for (std::size_t k = 0; k < from.dimension(); ++k) {
    const auto flat = compose(d, from.element(k)).flatten();
    for (std::size_t r = 0; r < flat.size(); ++r) out(r, k) = flat[r];
  }
  return out;
}

}  // namespace

std::size_t ext_dim_via_injective(const Representation& m, const Resolution& in, std::size_t i) {
  if (in.kind != ResolutionKind::injective)
    throw std::invalid_argument("ext_dim_via_injective: needs an injective resolution");
  require_degree(in, i);
  if (in.terms.empty() || i >= in.terms.size()) return 0;
  HomSpace here(m, in.terms[i]);
  std::size_t out = here.dimension();
  if (i + 1 < in.terms.size()) {
    const std::size_t size = HomSpace(m, in.terms[i + 1]).basis_matrix().rows();
    out -= rank(pushed_forward(m, here, in.differentials[i], size));
  }
  if (i >= 1) {
    HomSpace before(m, in.terms[i - 1]);
    out -= rank(pushed_forward(m, before, in.differentials[i - 1], here.basis_matrix().rows()));
  }
  return out;
}

std::size_t ext_dim_via_injective(const Representation& m, const Representation& n, std::size_t i, std::size_t cap) {
  if (!same_algebra(m.algebra(), n.algebra())) throw std::invalid_argument("ext_dim: algebra mismatch");
  return ext_dim_via_injective(m, minimal_resolution(n, ResolutionKind::injective, cap), i);
}

std::vector<Morphism> dual_complex(const Resolution& pm) {
  if (pm.truncated) throw TruncationError("dual_complex: projective resolution is not finite within the cap");
  const auto& a = *pm.target.algebra();
  const auto op = pm.target.algebra()->opposite();
  std::vector<Representation> duals;
  for (const auto& vs : pm.term_vertices) duals.push_back(standard_sum(op, StandardKind::projective, vs));

  std::vector<Morphism> out;
  for (std::size_t k = 0; k + 1 < pm.terms.size(); ++k) {
    const auto& upper_v = pm.term_vertices[k + 1];  // P_{k+1}
    const auto& lower_v = pm.term_vertices[k];      // P_k
    const auto upper_off = summand_offsets(a, upper_v);
    const auto lower_off = summand_offsets(a, lower_v);
    const auto dual_upper_off = summand_offsets(*op, upper_v);
    const Morphism& d = pm.differentials[k];

    // Generator s of P_k* goes to sum_t sum_p c(t, s, p) rev(p) in P_{k+1}*.
    std::vector<Matrix> images;
    for (std::size_t s = 0; s < lower_v.size(); ++s) {
      const std::size_t v = lower_v[s];
      images.emplace_back(duals[k + 1].dim(v), 1, a.field());
    }
    for (std::size_t t = 0; t < upper_v.size(); ++t) {
      const std::size_t u = upper_v[t];
      const Matrix col = generator_image(d, upper_v, upper_off, t);
      for (std::size_t s = 0; s < lower_v.size(); ++s) {
        const std::size_t v = lower_v[s];
        const auto& paths = a.paths_between(v, u);
        const auto& op_paths = op->paths_between(u, v);
        for (std::size_t j = 0; j < paths.size(); ++j) {
          const Scalar c = col(lower_off[u][s] + j, 0);
          if (c == 0) continue;
          const Path rp = a.reversed(paths[j]);
          const auto it = std::find(op_paths.begin(), op_paths.end(), rp);
          const std::size_t row = dual_upper_off[v][t] + static_cast<std::size_t>(it - op_paths.begin());
          images[s](row, 0) = a.field().add(images[s](row, 0), c);
        }
      }
    }
    out.push_back(projective_morphism(duals[k], lower_v, duals[k + 1], images));
  }
  return out;
}

Representation ext_module(const Representation& m, std::size_t i, std::size_t cap) {
  const auto pm = minimal_resolution(m, ResolutionKind::projective, cap);
  const auto op = m.algebra()->opposite();
  if (pm.truncated) throw TruncationError("ext_module: projective resolution is not finite within the cap");
  if (pm.terms.empty() || i >= pm.terms.size()) return Representation::zero(op);
  const auto complex = dual_complex(pm);
  const Representation here =
      i < complex.size() ? complex[i].source() : standard_sum(op, StandardKind::projective, pm.term_vertices[i]);
  Morphism cycles = i < complex.size() ? morphism_parts(complex[i]).kernel_inclusion : Morphism::identity(here);
  if (i == 0) return cycles.source();
  const Morphism boundaries = factor_through_mono(complex[i - 1], cycles);
  return morphism_parts(boundaries).cokernel;
}

std::int64_t euler_form(const BoundAlgebra& a, const std::vector<std::size_t>& dim_m,
                        const std::vector<std::size_t>& dim_n) {
  using Q = boost::rational<std::int64_t>;
  const auto cartan = cartan_matrix(a);
  const std::size_t n = a.vertex_count();
  // Solve C x = dim_m over Q by Gauss-Jordan.
  std::vector<std::vector<Q>> aug(n, std::vector<Q>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Q(cartan[r][c]);
    aug[r][n] = Q(static_cast<std::int64_t>(dim_m.at(r)));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c].numerator() == 0) ++p;
    if (p == n) throw UnsupportedError("euler_form: Cartan matrix is singular");
    std::swap(aug[p], aug[c]);
    const Q piv = aug[c][c];
    for (auto& e : aug[c]) e /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].numerator() == 0) continue;
      const Q factor = aug[r][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= factor * aug[c][k];
    }
  }
  Q total = 0;
  for (std::size_t v = 0; v < n; ++v) total += aug[v][n] * static_cast<std::int64_t>(dim_n.at(v));
  if (total.denominator() != 1) throw UnsupportedError("euler_form: value is not an integer");
  return total.numerator();
}

}  // namespace qhom
