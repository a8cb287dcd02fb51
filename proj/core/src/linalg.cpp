#include "qhom/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qhom {

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (p < 2 || p >= (Scalar{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Scalar PrimeField::reduce(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Scalar>(r);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols, PrimeField field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar v) { return v == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_.mul(v, s);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_, field_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(idx[r], c);
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("matrix product over different fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  const PrimeField f = a.field_;
  Matrix out(a.rows_, b.cols_, f);
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Scalar* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j]);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("matrix sum over different fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("matrix difference over different fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix hstack(std::span<const Matrix> parts, std::size_t rows, PrimeField field) {
  std::size_t cols = 0;
  for (const auto& m : parts) cols += m.cols();
  Matrix out(rows, cols, field);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> parts, std::size_t cols, PrimeField field) {
  std::size_t rows = 0;
  for (const auto& m : parts) rows += m.rows();
  Matrix out(rows, cols, field);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

Matrix block_diagonal(std::span<const Matrix> parts, PrimeField field) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& m : parts) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix out(rows, cols, field);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, c0, m);
    r0 += m.rows();
    c0 += m.cols();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon row_reduce(Matrix m) {
  const PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
    }
    const Scalar s = f.inv(m(lead, c));
    for (std::size_t j = c; j < cols; ++j) m(lead, j) = f.mul(m(lead, j), s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Scalar factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead, j)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

NullSpace null_space(const Matrix& m) {
  const PrimeField f = m.field();
  const std::size_t n = m.cols();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  NullSpace ns;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) ns.free.push_back(c);
  ns.basis = Matrix(n, ns.free.size(), f);
  for (std::size_t k = 0; k < ns.free.size(); ++k) {
    const std::size_t fc = ns.free[k];
    ns.basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      ns.basis(e.pivots[r], k) = f.neg(e.reduced(r, fc));
    }
  }
  return ns;
}

Matrix column_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.rows(), 0, m.field());
  const auto e = row_reduce(m);
  return m.select_cols(e.pivots);
}

Matrix complement_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  const Matrix parts[] = {basis, Matrix::identity(n, basis.field())};
  const Matrix joined = hstack(parts, n, basis.field());
  const auto e = row_reduce(joined);
  std::vector<std::size_t> extra;
  for (auto c : e.pivots)
    if (c >= basis.cols()) extra.push_back(c);
  return joined.select_cols(extra);
}

Matrix left_null_space(const Matrix& m) { return null_space(m.transpose()).basis.transpose(); }

Matrix left_inverse(const Matrix& basis) {
  const PrimeField f = basis.field();
  const std::size_t k = basis.cols();
  if (k == 0) return Matrix(0, basis.rows(), f);
  // Independent rows of `basis` form an invertible k x k block.
  const auto e = row_reduce(basis.transpose());
  if (e.pivots.size() != k) throw std::invalid_argument("left_inverse: columns are dependent");
  const Matrix square = basis.select_rows(e.pivots);
  const auto inv = inverse(square);
  Matrix out(k, basis.rows(), f);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, e.pivots[j]) = (*inv)(i, j);
  return out;
}

Matrix right_inverse(const Matrix& m) { return left_inverse(m.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  const PrimeField f = a.field();
  const std::size_t n = a.cols();
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const Matrix parts[] = {a, b};
  const auto e = row_reduce(hstack(parts, a.rows(), f));
  Matrix x(n, b.cols(), f);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t pc = e.pivots[r];
    if (pc >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(r, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0, m.field());
  const Matrix parts[] = {m, Matrix::identity(n, m.field())};
  const auto e = row_reduce(hstack(parts, n, m.field()));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix matrix_power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows(), m.field());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) {
  if (m.rows() == 0) return true;
  return matrix_power(m, m.rows()).is_zero();
}

// ---------------------------------------------------------------------------
// Characteristic polynomial (Hessenberg reduction) and root finding

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const PrimeField f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Scalar pinv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const Scalar u = f.mul(h(k, j), pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }

  // polys[m] is the characteristic polynomial of the leading m x m block.
  std::vector<std::vector<Scalar>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& pk = polys[k];
    pk.assign(k + 1, 0);
    const auto& prev = polys[k - 1];
    const Scalar diag = h(k - 1, k - 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      pk[i + 1] = f.add(pk[i + 1], prev[i]);
      pk[i] = f.sub(pk[i], f.mul(diag, prev[i]));
    }
    Scalar t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      const Scalar coeff = f.mul(t, h(k - i - 1, k - 1));
      if (coeff == 0) continue;
      const auto& q = polys[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pk[d] = f.sub(pk[d], f.mul(coeff, q[d]));
    }
  }
  return polys[n];
}

namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, PrimeField f) {
  trim(a);
  const Scalar lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    const Scalar q = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, PrimeField f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  return poly_mod(std::move(out), m, f);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, PrimeField f) {
  Poly result = poly_mod({1}, m, f);
  base = poly_mod(std::move(base), m, f);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, f);
    base = poly_mulmod(base, base, m, f);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, PrimeField f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, PrimeField f) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b, PrimeField f) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const Scalar lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Scalar c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return q;
}

// Cantor-Zassenhaus equal-degree splitting for a squarefree product of
// distinct linear factors (odd p).
void split_linear(const Poly& g, PrimeField f, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  std::uniform_int_distribution<Scalar> dist(0, f.modulus() - 1);
  for (;;) {
    const Poly shifted{dist(rng), 1};
    Poly h = poly_powmod(shifted, (f.modulus() - 1) / 2, g, f);
    h = poly_sub(std::move(h), Poly{1}, f);
    Poly d = poly_gcd(g, h, f);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, f, rng, out);
      split_linear(poly_div_exact(g, d, f), f, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Scalar> polynomial_roots(std::span<const Scalar> coeffs, PrimeField f) {
  Poly a(coeffs.begin(), coeffs.end());
  trim(a);
  std::vector<Scalar> roots;
  if (a.size() <= 1) return roots;
  const Scalar p = f.modulus();
  if (p <= 4096) {
    for (Scalar x = 0; x < p; ++x) {
      Scalar v = 0;
      for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, x), a[i]);
      if (v == 0) roots.push_back(x);
    }
    return roots;
  }
  // gcd(a, x^p - x) is the product of the distinct linear factors of a.
  Poly xp = poly_powmod(Poly{0, 1}, p, a, f);
  Poly g = poly_gcd(a, poly_sub(std::move(xp), Poly{0, 1}, f), f);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  split_linear(g, f, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qhom
