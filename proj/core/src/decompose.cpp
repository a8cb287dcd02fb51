#include <algorithm>
#include <random>

#include "qhom/errors.hpp"
#include "qhom/rep.hpp"

namespace qhom {

namespace {

constexpr int kRandomCandidates = 64;

struct Split {
  Summand first;
  Summand second;
};

std::vector<Scalar> eigenvalues(const Morphism& phi) {
  const PrimeField f = phi.source().field();
  std::vector<Scalar> out;
  for (const auto& b : phi.blocks()) {
    if (b.rows() == 0) continue;
    for (auto r : polynomial_roots(characteristic_polynomial(b), f)) {
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Morphism shifted(const Morphism& phi, Scalar lambda) { return phi - Morphism::identity(phi.source()).scaled(lambda); }

Morphism power(const Morphism& phi, std::size_t e) {
  std::vector<Matrix> blocks;
  for (const auto& b : phi.blocks()) blocks.push_back(matrix_power(b, e));
  return Morphism::unchecked(phi.source(), phi.target(), std::move(blocks));
}

// Fitting decomposition X = ker psi^N (+) im psi^N for psi = phi - lambda.
std::optional<Split> fitting_split(const Representation& x, const Morphism& phi) {
  const std::size_t total = x.total_dimension();
  for (auto lambda : eigenvalues(phi)) {
    const auto psi_n = power(shifted(phi, lambda), total);
    std::vector<Matrix> ker;
    std::vector<Matrix> img;
    std::size_t ker_dim = 0;
    std::size_t img_dim = 0;
    for (const auto& b : psi_n.blocks()) {
      ker.push_back(null_space(b).basis);
      img.push_back(column_basis(b));
      ker_dim += ker.back().cols();
      img_dim += img.back().cols();
    }
    if (ker_dim == 0 || img_dim == 0) continue;

    std::vector<Matrix> proj_k;
    std::vector<Matrix> proj_i;
    for (std::size_t v = 0; v < ker.size(); ++v) {
      const Matrix parts[] = {ker[v], img[v]};
      const auto binv = inverse(hstack(parts, x.dim(v), x.field()));
      if (!binv) throw DecompositionError("decompose: Fitting summands are not complementary");
      const std::size_t k = ker[v].cols();
      proj_k.push_back(binv->block(0, 0, k, x.dim(v)));
      proj_i.push_back(binv->block(k, 0, x.dim(v) - k, x.dim(v)));
    }
    auto inc_k = submodule(x, ker);
    auto inc_i = submodule(x, img);
    Summand first{inc_k.source(), inc_k, Morphism::unchecked(x, inc_k.source(), std::move(proj_k))};
    Summand second{inc_i.source(), inc_i, Morphism::unchecked(x, inc_i.source(), std::move(proj_i))};
    return Split{std::move(first), std::move(second)};
  }
  return std::nullopt;
}

// Coordinates-free span bookkeeping for subspaces of End(X).
class Span {
 public:
  explicit Span(PrimeField f) : field_(f) {}

  // Adds v if independent; returns true if added.
  bool add(const std::vector<Scalar>& v) {
    std::vector<Scalar> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = r[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = field_.sub(r[j], field_.mul(c, rows_[i][j]));
    }
    auto it = std::find_if(r.begin(), r.end(), [](Scalar s) { return s != 0; });
    if (it == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Scalar inv = field_.inv(r[p]);
    for (auto& e : r) e = field_.mul(e, inv);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = rows_[i][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, r[j]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  [[nodiscard]] bool contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = r[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = field_.sub(r[j], field_.mul(c, rows_[i][j]));
    }
    return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
  }

  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }

 private:
  PrimeField field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

// True iff End(X) = F_p * 1 + N with N a nilpotent ideal, i.e. X is
// indecomposable with split-local endomorphism ring.
bool endomorphisms_local(const std::vector<Morphism>& basis) {
  if (basis.empty()) return false;
  const auto& x = basis.front().source();
  const PrimeField f = x.field();
  std::vector<Morphism> nil;
  Span n_span(f);
  for (const auto& phi : basis) {
    const auto ev = eigenvalues(phi);
    if (ev.size() > 1) return false;
    const Scalar lambda = ev.empty() ? 0 : ev.front();
    auto psi = shifted(phi, lambda);
    for (const auto& b : psi.blocks()) {
      if (!is_nilpotent(b)) return false;
    }
    if (n_span.add(psi.flatten())) nil.push_back(std::move(psi));
  }
  for (const auto& a : nil) {
    for (const auto& b : nil) {
      if (!n_span.contains(compose(a, b).flatten())) return false;
    }
  }
  // Power chain N, N^2, ... must reach zero.
  std::vector<Morphism> layer = nil;
  for (std::size_t step = 0; step <= nil.size() && !layer.empty(); ++step) {
    std::vector<Morphism> next;
    Span next_span(f);
    for (const auto& a : nil) {
      for (const auto& b : layer) {
        auto c = compose(a, b);
        if (next_span.add(c.flatten())) next.push_back(std::move(c));
      }
    }
    if (next.size() >= layer.size() && !next.empty()) return false;
    layer = std::move(next);
  }
  return layer.empty();
}

std::optional<Split> try_split(const Representation& x, std::uint64_t seed) {
  HomSpace end(x, x);
  const std::size_t d = end.dimension();
  if (d <= 1) return std::nullopt;
  const auto basis = end.basis();
  for (const auto& phi : basis) {
    if (auto s = fitting_split(x, phi)) return s;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (auto s = fitting_split(x, compose(basis[i], basis[j]))) return s;
    }
  }
  std::mt19937_64 rng(seed ^ (x.total_dimension() * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<Scalar> dist(0, x.field().modulus() - 1);
  std::vector<Scalar> coeffs(d);
  for (int t = 0; t < kRandomCandidates; ++t) {
    for (auto& c : coeffs) c = dist(rng);
    if (auto s = fitting_split(x, end.combination(coeffs))) return s;
  }
  if (endomorphisms_local(basis)) return std::nullopt;
  throw DecompositionError("decompose: could not split or certify a module of dimension " +
                           std::to_string(x.total_dimension()));
}

bool summand_less(const Summand& a, const Summand& b) {
  const auto& ma = a.module;
  const auto& mb = b.module;
  if (ma.dims() != mb.dims()) return ma.dims() < mb.dims();
  for (std::size_t k = 0; k < ma.maps().size(); ++k) {
    const auto da = ma.map(k).data();
    const auto db = mb.map(k).data();
    if (!std::equal(da.begin(), da.end(), db.begin(), db.end())) {
      return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
    }
  }
  return false;
}

}  // namespace

std::vector<Summand> decompose_with_maps(const Representation& m, std::uint64_t seed) {
  std::vector<Summand> done;
  if (m.is_zero()) return done;
  std::vector<Summand> work{Summand{m, Morphism::identity(m), Morphism::identity(m)}};
  while (!work.empty()) {
    Summand cur = std::move(work.back());
    work.pop_back();
    std::optional<Split> s;
    if (cur.module.total_dimension() > 1) s = try_split(cur.module, seed);
    if (!s) {
      done.push_back(std::move(cur));
      continue;
    }
    for (Summand* part : {&s->first, &s->second}) {
      work.push_back(
          Summand{part->module, compose(cur.inclusion, part->inclusion), compose(part->projection, cur.projection)});
    }
  }
  std::stable_sort(done.begin(), done.end(), summand_less);
  return done;
}

std::vector<Representation> decompose(const Representation& m, std::uint64_t seed) {
  std::vector<Representation> out;
  for (auto& s : decompose_with_maps(m, seed)) out.push_back(std::move(s.module));
  return out;
}

bool is_indecomposable(const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  if (m.total_dimension() == 1) return true;
  return !try_split(m, seed).has_value();
}

}  // namespace qhom
