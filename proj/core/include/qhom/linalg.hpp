#pragma once

// Dense linear algebra over a prime field F_p.
//
// Everything in qhom reduces to exact elimination over F_p: Hom spaces are
// null spaces, (co)kernels are column spaces, Ext dimensions are ranks. The
// modulus travels with every matrix so that mixing fields is caught early.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qhom {

using Scalar = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  constexpr PrimeField() = default;
  explicit PrimeField(Scalar p);

  [[nodiscard]] Scalar modulus() const noexcept { return p_; }

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const noexcept {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  [[nodiscard]] Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  [[nodiscard]] Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  [[nodiscard]] Scalar inv(Scalar a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  [[nodiscard]] Scalar reduce(std::int64_t v) const noexcept;

  friend bool operator==(PrimeField, PrimeField) = default;

 private:
  Scalar p_ = 2;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  /// Builds from row-major integer data, reducing every entry mod p.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols, PrimeField field);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] PrimeField field() const noexcept { return field_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> data() const noexcept { return data_; }
  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix scaled(Scalar s) const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  [[nodiscard]] Matrix select_rows(std::span<const std::size_t> idx) const;
  [[nodiscard]] Matrix select_cols(std::span<const std::size_t> idx) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<Scalar> data_;
};

[[nodiscard]] Matrix hstack(std::span<const Matrix> parts, std::size_t rows, PrimeField field);
[[nodiscard]] Matrix vstack(std::span<const Matrix> parts, std::size_t cols, PrimeField field);
[[nodiscard]] Matrix block_diagonal(std::span<const Matrix> parts, PrimeField field);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

[[nodiscard]] Echelon row_reduce(Matrix m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}. Column k of `basis` has a 1 at row `free[k]` and
/// zeros at every other free row, so the coordinates of any null vector are
/// its entries at the free rows.
struct NullSpace {
  Matrix basis;
  std::vector<std::size_t> free;
};

[[nodiscard]] NullSpace null_space(const Matrix& m);
/// Linearly independent columns of `m` spanning its column space.
[[nodiscard]] Matrix column_basis(const Matrix& m);
/// Columns extending the independent columns of `basis` to a basis of F_p^n.
[[nodiscard]] Matrix complement_basis(const Matrix& basis);
/// Rows spanning {y : y m = 0}; full row rank.
[[nodiscard]] Matrix left_null_space(const Matrix& m);

/// L with L * basis = I, for `basis` of full column rank.
[[nodiscard]] Matrix left_inverse(const Matrix& basis);
/// R with m * R = I, for `m` of full row rank.
[[nodiscard]] Matrix right_inverse(const Matrix& m);

/// Some x with a x = b, if one exists.
[[nodiscard]] std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

[[nodiscard]] Matrix matrix_power(const Matrix& m, std::size_t e);
[[nodiscard]] bool is_nilpotent(const Matrix& m);

/// Coefficients c_0..c_n (monic, c_n = 1) of det(x I - m).
[[nodiscard]] std::vector<Scalar> characteristic_polynomial(const Matrix& m);
/// Distinct roots in F_p of a polynomial given by ascending coefficients.
[[nodiscard]] std::vector<Scalar> polynomial_roots(std::span<const Scalar> coeffs, PrimeField field);

}  // namespace qhom
