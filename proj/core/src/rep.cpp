#include "qhom/rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qhom {

namespace {

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (!same_algebra(a, b)) throw std::invalid_argument(std::string(what) + ": algebra mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : data_(std::make_shared<const Data>(Data{std::move(algebra), std::move(dims), std::move(maps)})) {}

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : Representation(Unchecked{}, std::move(algebra), std::move(dims), std::move(maps)) {
  const auto& a = *data_->algebra;
  const auto& q = a.quiver();
  if (data_->dims.size() != q.vertex_count()) throw std::invalid_argument("representation: wrong number of vertices");
  if (data_->maps.size() != q.arrow_count()) throw std::invalid_argument("representation: wrong number of arrows");
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    const auto& m = data_->maps[ai];
    if (m.rows() != data_->dims[arr.target] || m.cols() != data_->dims[arr.source]) {
      throw std::invalid_argument("representation: matrix for arrow '" + arr.name + "' has the wrong shape");
    }
    if (m.field() != a.field()) throw std::invalid_argument("representation: matrix over the wrong field");
  }
  for (const auto& r : a.relations()) {
    if (!path_action(r).is_zero()) {
      throw std::invalid_argument("representation: relation " + a.path_name(r) + " does not act as zero");
    }
  }
}

Representation make_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps) {
  return Representation(Representation::Unchecked{}, std::move(algebra), std::move(dims), std::move(maps));
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto& q = algebra->quiver();
  std::vector<Matrix> maps(q.arrow_count(), Matrix(0, 0, algebra->field()));
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  return make_unchecked(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dimension() const noexcept {
  return std::accumulate(data_->dims.begin(), data_->dims.end(), std::size_t{0});
}

Matrix Representation::path_action(const Path& p) const {
  Matrix result = Matrix::identity(dim(p.source), field());
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) result = map(*it) * result;
  return result;
}

bool operator==(const Representation& a, const Representation& b) {
  return a.data_ == b.data_ || (same_algebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.maps() == b.maps());
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(Unchecked, Representation source, Representation target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> blocks)
    : Morphism(Unchecked{}, std::move(source), std::move(target), std::move(blocks)) {
  require_same_algebra(source_.algebra(), target_.algebra(), "morphism");
  const std::size_t n = source_.algebra()->vertex_count();
  if (blocks_.size() != n) throw std::invalid_argument("morphism: wrong number of blocks");
  for (std::size_t v = 0; v < n; ++v) {
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v)) {
      throw std::invalid_argument("morphism: block has the wrong shape");
    }
  }
  if (!intertwines()) throw std::invalid_argument("morphism: does not commute with the arrows");
}

Morphism Morphism::unchecked(Representation source, Representation target, std::vector<Matrix> blocks) {
  return Morphism(Unchecked{}, std::move(source), std::move(target), std::move(blocks));
}

Morphism Morphism::identity(const Representation& m) {
  std::vector<Matrix> blocks;
  for (auto d : m.dims()) blocks.push_back(Matrix::identity(d, m.field()));
  return unchecked(m, m, std::move(blocks));
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  require_same_algebra(source.algebra(), target.algebra(), "zero morphism");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    blocks.emplace_back(target.dim(v), source.dim(v), source.field());
  }
  return unchecked(source, target, std::move(blocks));
}

bool Morphism::is_zero() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

bool Morphism::is_mono() const {
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (rank(blocks_[v]) != source_.dim(v)) return false;
  return true;
}

bool Morphism::is_epi() const {
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (rank(blocks_[v]) != target_.dim(v)) return false;
  return true;
}

bool Morphism::is_iso() const { return source_.dims() == target_.dims() && is_mono(); }

bool Morphism::intertwines() const {
  const auto& q = source_.algebra()->quiver();
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    if (!(blocks_[arr.target] * source_.map(ai) == target_.map(ai) * blocks_[arr.source])) return false;
  }
  return true;
}

std::vector<Scalar> Morphism::flatten() const {
  std::vector<Scalar> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.data().begin(), b.data().end());
  return out;
}

Morphism Morphism::scaled(Scalar s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return unchecked(source_, target_, std::move(blocks));
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < a.blocks_.size(); ++v) blocks.push_back(a.blocks_[v] + b.blocks_[v]);
  return Morphism::unchecked(a.source_, a.target_, std::move(blocks));
}

Morphism operator-(const Morphism& a, const Morphism& b) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < a.blocks_.size(); ++v) blocks.push_back(a.blocks_[v] - b.blocks_[v]);
  return Morphism::unchecked(a.source_, a.target_, std::move(blocks));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (outer.source().dims() != inner.target().dims()) throw std::invalid_argument("compose: morphisms not composable");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < outer.blocks().size(); ++v) blocks.push_back(outer.block(v) * inner.block(v));
  return Morphism::unchecked(inner.source(), outer.target(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Standard modules and duality

namespace {

Representation projective_module(const AlgebraPtr& a, std::size_t v) {
  const auto& q = a->quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = a->paths_between(v, w).size();
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    const auto& from = a->paths_between(v, arr.source);
    const auto& to = a->paths_between(v, arr.target);
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

}  // namespace

Representation standard_module(const AlgebraPtr& algebra, StandardKind kind, std::size_t v) {
  if (v >= algebra->vertex_count()) throw std::invalid_argument("standard_module: unknown vertex");
  switch (kind) {
    case StandardKind::simple: {
      std::vector<std::size_t> dims(algebra->vertex_count(), 0);
      dims[v] = 1;
      std::vector<Matrix> maps;
      for (const auto& arr : algebra->quiver().arrows())
        maps.emplace_back(dims[arr.target], dims[arr.source], algebra->field());
      return make_unchecked(algebra, std::move(dims), std::move(maps));
    }
    case StandardKind::projective:
      return projective_module(algebra, v);
    case StandardKind::injective:
      return duality(projective_module(algebra->opposite(), v));
  }
  throw std::invalid_argument("standard_module: bad kind");
}

Representation duality(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& mat : m.maps()) maps.push_back(mat.transpose());
  return make_unchecked(m.algebra()->opposite(), m.dims(), std::move(maps));
}

Morphism duality(const Morphism& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
  return Morphism::unchecked(duality(f.target()), duality(f.source()), std::move(blocks));
}

Representation standard_sum(const AlgebraPtr& algebra, StandardKind kind, std::span<const std::size_t> vertices) {
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(standard_module(algebra, kind, v));
  return direct_sum(algebra, parts);
}

// ---------------------------------------------------------------------------
// Hom spaces

HomSpace::HomSpace(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(source_.algebra(), target_.algebra(), "hom_basis");
  const auto& q = source_.algebra()->quiver();
  const PrimeField f = source_.field();
  const std::size_t n = q.vertex_count();

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + target_.dim(v) * source_.dim(v);
  const std::size_t unknowns = offset[n];

  std::size_t equations = 0;
  for (const auto& arr : q.arrows()) equations += target_.dim(arr.target) * source_.dim(arr.source);

  // Unknown X_v is stored row-major: X_v(r, c) at offset[v] + r * dim_M(v) + c.
  // For a : u -> w, (X_w M_a - N_a X_u)(r, c) = 0.
  Matrix system(equations, unknowns, f);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    const std::size_t u = arr.source;
    const std::size_t w = arr.target;
    const Matrix& ma = source_.map(ai);
    const Matrix& na = target_.map(ai);
    const std::size_t mu = source_.dim(u);
    const std::size_t mw = source_.dim(w);
    const std::size_t nw = target_.dim(w);
    const std::size_t nu = target_.dim(u);
    for (std::size_t r = 0; r < nw; ++r) {
      for (std::size_t c = 0; c < mu; ++c, ++row) {
        for (std::size_t k = 0; k < mw; ++k) {
          const Scalar coeff = ma(k, c);
          if (coeff == 0) continue;
          Scalar& cell = system(row, offset[w] + r * mw + k);
          cell = f.add(cell, coeff);
        }
        for (std::size_t k = 0; k < nu; ++k) {
          const Scalar coeff = na(r, k);
          if (coeff == 0) continue;
          Scalar& cell = system(row, offset[u] + k * mu + c);
          cell = f.sub(cell, coeff);
        }
      }
    }
  }
  kernel_ = null_space(system);
}

Morphism HomSpace::element(std::size_t k) const {
  std::vector<Scalar> coeffs(dimension(), 0);
  coeffs.at(k) = 1;
  return combination(coeffs);
}

std::vector<Morphism> HomSpace::basis() const {
  std::vector<Morphism> out;
  out.reserve(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) out.push_back(element(k));
  return out;
}

Morphism HomSpace::combination(std::span<const Scalar> coeffs) const {
  const PrimeField f = source_.field();
  const std::size_t n = source_.dims().size();
  std::vector<Matrix> blocks;
  std::size_t idx = 0;
  for (std::size_t v = 0; v < n; ++v) {
    Matrix b(target_.dim(v), source_.dim(v), f);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c, ++idx) {
        Scalar acc = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          if (coeffs[k] != 0) acc = f.add(acc, f.mul(coeffs[k], kernel_.basis(idx, k)));
        }
        b(r, c) = acc;
      }
    }
    blocks.push_back(std::move(b));
  }
  return Morphism::unchecked(source_, target_, std::move(blocks));
}

std::vector<Scalar> HomSpace::coordinates(const Morphism& f) const {
  const auto flat = f.flatten();
  std::vector<Scalar> out;
  out.reserve(kernel_.free.size());
  for (auto idx : kernel_.free) out.push_back(flat.at(idx));
  return out;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n).basis(); }

std::size_t hom_dimension(const Representation& m, const Representation& n) { return HomSpace(m, n).dimension(); }

// ---------------------------------------------------------------------------
// Kernels, images, cokernels

namespace {

// Submodule of m with the given per-vertex column bases.
Representation restrict_to(const Representation& m, const std::vector<Matrix>& bases,
                           const std::vector<Matrix>& lefts) {
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    maps.push_back(lefts[arr.target] * (m.map(ai) * bases[arr.source]));
  }
  return make_unchecked(m.algebra(), std::move(dims), std::move(maps));
}

// Quotient of m by the submodule with the given column bases; returns the
// projection.
Morphism quotient_by(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> proj;
  std::vector<Matrix> rights;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < bases.size(); ++v) {
    Matrix qv = bases[v].cols() == 0 ? Matrix::identity(m.dim(v), m.field()) : left_null_space(bases[v]);
    dims.push_back(qv.rows());
    rights.push_back(right_inverse(qv));
    proj.push_back(std::move(qv));
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    maps.push_back(proj[arr.target] * (m.map(ai) * rights[arr.source]));
  }
  auto quotient = make_unchecked(m.algebra(), std::move(dims), std::move(maps));
  return Morphism::unchecked(m, std::move(quotient), std::move(proj));
}

}  // namespace

Morphism submodule(const Representation& m, std::vector<Matrix> bases) {
  std::vector<Matrix> lefts;
  for (const auto& b : bases) lefts.push_back(left_inverse(b));
  auto sub = restrict_to(m, bases, lefts);
  return Morphism::unchecked(std::move(sub), m, std::move(bases));
}

MorphismParts morphism_parts(const Morphism& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const std::size_t n = src.dims().size();

  std::vector<Matrix> ker_bases;
  std::vector<Matrix> img_bases;
  for (std::size_t v = 0; v < n; ++v) {
    ker_bases.push_back(null_space(f.block(v)).basis);
    img_bases.push_back(column_basis(f.block(v)));
  }
  Morphism ker_incl = submodule(src, ker_bases);

  std::vector<Matrix> img_lefts;
  for (const auto& b : img_bases) img_lefts.push_back(left_inverse(b));
  Representation image = restrict_to(tgt, img_bases, img_lefts);
  std::vector<Matrix> coimage_blocks;
  for (std::size_t v = 0; v < n; ++v) coimage_blocks.push_back(img_lefts[v] * f.block(v));
  Morphism coimage = Morphism::unchecked(src, image, std::move(coimage_blocks));
  Morphism img_incl = Morphism::unchecked(image, tgt, img_bases);

  Morphism coker_proj = quotient_by(tgt, img_bases);
  Representation coker = coker_proj.target();
  Representation ker = ker_incl.source();
  return MorphismParts{std::move(ker),      std::move(ker_incl), std::move(image),     std::move(coimage),
                       std::move(img_incl), std::move(coker),    std::move(coker_proj)};
}

Morphism factor_through_mono(const Morphism& g, const Morphism& mono) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < g.blocks().size(); ++v) {
    const Matrix lifted = left_inverse(mono.block(v)) * g.block(v);
    if (!(mono.block(v) * lifted == g.block(v))) {
      throw std::invalid_argument("factor_through_mono: image not contained in the subobject");
    }
    blocks.push_back(lifted);
  }
  return Morphism::unchecked(g.source(), mono.source(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Direct sums and pushouts

DirectSum direct_sum_with_maps(const AlgebraPtr& algebra, std::span<const Representation> parts) {
  const auto& q = algebra->quiver();
  const PrimeField f = algebra->field();
  const std::size_t n = q.vertex_count();
  for (const auto& p : parts) require_same_algebra(algebra, p.algebra(), "direct_sum");

  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(ai));
    maps.push_back(block_diagonal(blocks, f));
  }
  Representation sum = make_unchecked(algebra, dims, std::move(maps));

  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offset(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj;
    std::vector<Matrix> proj;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(dims[v], p.dim(v), f);
      Matrix pr(p.dim(v), dims[v], f);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        pr(k, offset[v] + k) = 1;
      }
      offset[v] += p.dim(v);
      inj.push_back(std::move(i));
      proj.push_back(std::move(pr));
    }
    out.injections.push_back(Morphism::unchecked(p, sum, std::move(inj)));
    out.projections.push_back(Morphism::unchecked(sum, p, std::move(proj)));
  }
  return out;
}

Representation direct_sum(const AlgebraPtr& algebra, std::span<const Representation> parts) {
  return direct_sum_with_maps(algebra, parts).sum;
}

Morphism copair(const DirectSum& sum, std::span<const Morphism> components, const Representation& target) {
  if (components.size() != sum.injections.size()) throw std::invalid_argument("copair: wrong number of components");
  const std::size_t n = target.dims().size();
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Matrix> parts;
    for (const auto& c : components) parts.push_back(c.block(v));
    blocks.push_back(hstack(parts, target.dim(v), target.field()));
  }
  return Morphism::unchecked(sum.sum, target, std::move(blocks));
}

Morphism pair(const DirectSum& sum, std::span<const Morphism> components, const Representation& source) {
  if (components.size() != sum.projections.size()) throw std::invalid_argument("pair: wrong number of components");
  const std::size_t n = source.dims().size();
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Matrix> parts;
    for (const auto& c : components) parts.push_back(c.block(v));
    blocks.push_back(vstack(parts, source.dim(v), source.field()));
  }
  return Morphism::unchecked(source, sum.sum, std::move(blocks));
}

Pushout pushout(const Morphism& f, const Morphism& g) {
  const Representation parts[] = {f.target(), g.target()};
  auto sum = direct_sum_with_maps(f.source().algebra(), parts);
  const Morphism comps[] = {f, g.scaled(f.source().field().neg(1))};
  auto into = pair(sum, comps, f.source());
  auto parts_of = morphism_parts(into);
  auto from_first = compose(parts_of.cokernel_projection, sum.injections[0]);
  auto from_second = compose(parts_of.cokernel_projection, sum.injections[1]);
  return Pushout{parts_of.cokernel, std::move(from_first), std::move(from_second)};
}

Morphism random_basis_change(const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PrimeField f = m.field();
  std::uniform_int_distribution<Scalar> dist(0, f.modulus() - 1);
  std::vector<Matrix> g;
  std::vector<Matrix> ginv;
  for (auto d : m.dims()) {
    for (;;) {
      Matrix cand(d, d, f);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) cand(r, c) = dist(rng);
      if (auto inv = inverse(cand)) {
        g.push_back(std::move(cand));
        ginv.push_back(std::move(*inv));
        break;
      }
    }
  }
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    maps.push_back(g[arr.target] * m.map(ai) * ginv[arr.source]);
  }
  auto changed = make_unchecked(m.algebra(), m.dims(), std::move(maps));
  return Morphism::unchecked(m, std::move(changed), std::move(g));
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<Morphism> find_isomorphism(const Representation& m, const Representation& n, std::uint64_t seed) {
  require_same_algebra(m.algebra(), n.algebra(), "is_isomorphic");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return Morphism::zero(m, n);
  HomSpace hom(m, n);
  const std::size_t d = hom.dimension();
  if (d == 0) return std::nullopt;

  auto all_invertible = [&](const Morphism& f) {
    for (std::size_t v = 0; v < f.blocks().size(); ++v)
      if (rank(f.block(v)) != m.dim(v)) return false;
    return true;
  };

  std::vector<Scalar> coeffs(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[k] = 1;
    auto f = hom.combination(coeffs);
    if (all_invertible(f)) return f;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> dist(0, m.field().modulus() - 1);
  constexpr int kRetries = 64;
  for (int t = 0; t < kRetries; ++t) {
    for (auto& c : coeffs) c = dist(rng);
    auto f = hom.combination(coeffs);
    if (all_invertible(f)) return f;
  }
  // Deterministic sweep over pairwise sums of basis elements.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      std::fill(coeffs.begin(), coeffs.end(), 0);
      coeffs[i] = 1;
      coeffs[j] = 1;
      auto f = hom.combination(coeffs);
      if (all_invertible(f)) return f;
    }
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

// ---------------------------------------------------------------------------
// Radical, top, socle, covers

namespace {

std::vector<Matrix> radical_bases(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<Matrix>> incoming(n);
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) incoming[q.arrow(ai).target].push_back(m.map(ai));
  std::vector<Matrix> bases;
  for (std::size_t w = 0; w < n; ++w) {
    if (incoming[w].empty()) {
      bases.emplace_back(m.dim(w), 0, m.field());
    } else {
      bases.push_back(column_basis(hstack(incoming[w], m.dim(w), m.field())));
    }
  }
  return bases;
}

std::vector<Matrix> socle_bases(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<Matrix>> outgoing(n);
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) outgoing[q.arrow(ai).source].push_back(m.map(ai));
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < n; ++v) {
    if (outgoing[v].empty()) {
      bases.push_back(Matrix::identity(m.dim(v), m.field()));
    } else {
      bases.push_back(null_space(vstack(outgoing[v], m.dim(v), m.field())).basis);
    }
  }
  return bases;
}

}  // namespace

FiltrationParts filtration_parts(const Representation& m) {
  auto rad_incl = submodule(m, radical_bases(m));
  auto top_proj = morphism_parts(rad_incl).cokernel_projection;
  auto soc_incl = submodule(m, socle_bases(m));
  Representation rad = rad_incl.source();
  Representation top = top_proj.target();
  Representation soc = soc_incl.source();
  return FiltrationParts{std::move(rad),      std::move(rad_incl), std::move(top),
                         std::move(top_proj), std::move(soc),      std::move(soc_incl)};
}

std::vector<std::size_t> top_multiplicities(const Representation& m) {
  const auto bases = radical_bases(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < bases.size(); ++v) out.push_back(m.dim(v) - bases[v].cols());
  return out;
}

std::vector<std::size_t> socle_multiplicities(const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& b : socle_bases(m)) out.push_back(b.cols());
  return out;
}

Cover projective_cover(const Representation& m) {
  const auto& a = m.algebra();
  const std::size_t n = a->vertex_count();
  const auto rad = radical_bases(m);
  std::vector<std::size_t> vertices;
  std::vector<Matrix> generators;  // one column per generator, at its vertex
  for (std::size_t v = 0; v < n; ++v) {
    Matrix comp = complement_basis(rad[v]);
    for (std::size_t k = 0; k < comp.cols(); ++k) {
      vertices.push_back(v);
      generators.push_back(comp.block(0, k, comp.rows(), 1));
    }
  }
  Representation cover = standard_sum(a, StandardKind::projective, vertices);
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Matrix> cols;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      for (const auto& p : a->paths_between(vertices[s], w)) cols.push_back(m.path_action(p) * generators[s]);
    }
    blocks.push_back(hstack(cols, m.dim(w), m.field()));
  }
  return Cover{Morphism::unchecked(std::move(cover), m, std::move(blocks)), std::move(vertices)};
}

Cover injective_envelope(const Representation& m) {
  auto dual_cover = projective_cover(duality(m));
  return Cover{duality(dual_cover.map), std::move(dual_cover.summand_vertices)};
}

Morphism cover_envelope(const Representation& m, CoverSide side) {
  if (m.is_zero()) throw std::invalid_argument("cover_envelope: zero module");
  return side == CoverSide::projective_cover ? projective_cover(m).map : injective_envelope(m).map;
}

// ---------------------------------------------------------------------------
// Minimal versions

MinimalVersion right_minimal_from_summands(std::span<const Representation> summands,
                                           std::span<const Morphism> components, const Representation& target) {
  const auto& algebra = target.algebra();
  const PrimeField f = target.field();
  std::vector<std::size_t> kept(summands.size());
  std::iota(kept.begin(), kept.end(), 0);
  std::vector<Representation> dropped;

  for (std::size_t i = summands.size(); i-- > 0;) {
    bool deletable = components[i].is_zero();
    if (!deletable) {
      std::vector<Representation> others;
      std::vector<Morphism> other_maps;
      for (auto k : kept) {
        if (k == i) continue;
        others.push_back(summands[k]);
        other_maps.push_back(components[k]);
      }
      if (!others.empty()) {
        auto sum = direct_sum_with_maps(algebra, others);
        auto restricted = copair(sum, other_maps, target);
        HomSpace lifts(summands[i], sum.sum);
        const auto rhs_flat = components[i].flatten();
        Matrix cols(rhs_flat.size(), lifts.dimension(), f);
        for (std::size_t k = 0; k < lifts.dimension(); ++k) {
          const auto flat = compose(restricted, lifts.element(k)).flatten();
          for (std::size_t r = 0; r < flat.size(); ++r) cols(r, k) = flat[r];
        }
        Matrix rhs(rhs_flat.size(), 1, f);
        for (std::size_t r = 0; r < rhs_flat.size(); ++r) rhs(r, 0) = rhs_flat[r];
        deletable = solve(cols, rhs).has_value();
      }
    }
    if (deletable) {
      kept.erase(std::find(kept.begin(), kept.end(), i));
      dropped.insert(dropped.begin(), summands[i]);
    }
  }

  std::vector<Representation> kept_modules;
  std::vector<Morphism> kept_maps;
  for (auto k : kept) {
    kept_modules.push_back(summands[k]);
    kept_maps.push_back(components[k]);
  }
  auto sum = direct_sum_with_maps(algebra, kept_modules);
  return MinimalVersion{copair(sum, kept_maps, target), direct_sum(algebra, dropped)};
}

MinimalVersion minimal_version(const Morphism& f, Side side, std::uint64_t seed) {
  if (side == Side::left) {
    auto mv = minimal_version(duality(f), Side::right, seed);
    return MinimalVersion{duality(mv.reduced), duality(mv.discarded)};
  }
  const auto parts = decompose_with_maps(f.source(), seed);
  std::vector<Representation> summands;
  std::vector<Morphism> comps;
  for (const auto& s : parts) {
    summands.push_back(s.module);
    comps.push_back(compose(f, s.inclusion));
  }
  return right_minimal_from_summands(summands, comps, f.target());
}

bool is_minimal(const Morphism& f, Side side, std::uint64_t seed) {
  return minimal_version(f, side, seed).discarded.is_zero();
}

}  // namespace qhom
