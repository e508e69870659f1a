#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace weylcomp {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Element of Q(i); only used to describe complex matrices before realifying.
struct GaussianRational {
  Rational re;
  Rational im;
};

/// Polynomial over Q in one variable, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coefficients);
  static ExactPoly constant(const Rational& c);
  static ExactPoly monomial(const Rational& c, std::size_t degree);
  /// 1 - t^d
  static ExactPoly one_minus_t_pow(std::size_t d);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly operator*(const Rational& c) const;
  ExactPoly& operator+=(const ExactPoly& o) { return *this = *this + o; }
  ExactPoly& operator*=(const ExactPoly& o) { return *this = *this * o; }

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  ExactPoly quotient;
  ExactPoly remainder;
};

PolyDivision divide(const ExactPoly& num, const ExactPoly& den);
/// Monic gcd; gcd(0, 0) = 0.
ExactPoly gcd(ExactPoly a, ExactPoly b);
/// First `terms` coefficients of num/den as a power series. den(0) != 0.
std::vector<Rational> series_expand(const ExactPoly& num, const ExactPoly& den,
                                    std::size_t terms);

/// Dense row-major rational matrix.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Integer matrix from nested braces, e.g. {{0, -1}, {1, -1}}.
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const Rational> d);
  /// Replaces each complex entry a+bi by the block [[a, -b], [b, a]].
  static ExactMatrix realify(std::size_t rows, std::size_t cols,
                             std::span<const GaussianRational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;
  bool is_identity() const;

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return entries_; }

  ExactMatrix transpose() const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const Rational& c) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const noexcept;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  return mat_mul(a, b);
}
ExactMatrix mat_inverse(const ExactMatrix& a);
std::size_t mat_rank(const ExactMatrix& a);
/// Columns form a basis of {x : a x = 0}.
ExactMatrix kernel_basis(const ExactMatrix& a);
Rational determinant(const ExactMatrix& a);
/// det(I - t a) as a polynomial in t.
ExactPoly det_one_minus_t(const ExactMatrix& a);
/// Transpose-inverse.
ExactMatrix dual(const ExactMatrix& a);

nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExactPoly& p);

}  // namespace weylcomp
