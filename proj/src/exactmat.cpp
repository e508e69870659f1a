#include "weylcomp/exactmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "weylcomp/error.hpp"

namespace weylcomp {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(Errc::Parse, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- ExactPoly

ExactPoly::ExactPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::one_minus_t_pow(std::size_t d) {
  std::vector<Rational> v(d + 1);
  v[0] = 1;
  v[d] -= 1;
  return ExactPoly(std::move(v));
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational ExactPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const { return *this + o * Rational(-1); }

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return ExactPoly(std::move(v));
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) out << mag.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

PolyDivision divide(const ExactPoly& num, const ExactPoly& den) {
  if (den.is_zero()) throw Error(Errc::SingularMatrix, "polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {ExactPoly{}, num};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + d.size() - 1] / d.back();
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly gcd(ExactPoly a, ExactPoly b) {
  while (!b.is_zero()) {
    ExactPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

std::vector<Rational> series_expand(const ExactPoly& num, const ExactPoly& den,
                                    std::size_t terms) {
  if (den.is_zero() || sgn(den.coeff(0)) == 0) {
    throw Error(Errc::SingularMatrix, "series denominator vanishes at t = 0");
  }
  const auto& d = den.coefficients();
  std::vector<Rational> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = num.coeff(k);
    for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * out[k - j];
    out[k] = acc / d[0];
  }
  return out;
}

// -------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "entry count does not match shape");
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Rational> d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::realify(std::size_t rows, std::size_t cols,
                                 std::span<const GaussianRational> entries) {
  if (entries.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "entry count does not match shape");
  }
  ExactMatrix m(2 * rows, 2 * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& z = entries[r * cols + c];
      m(2 * r, 2 * c) = z.re;
      m(2 * r, 2 * c + 1) = -z.im;
      m(2 * r + 1, 2 * c) = z.im;
      m(2 * r + 1, 2 * c + 1) = z.re;
    }
  }
  return m;
}

bool ExactMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  }
  ExactMatrix s = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += o.entries_[i];
  return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o * Rational(-1); }

ExactMatrix ExactMatrix::operator*(const Rational& c) const {
  ExactMatrix s = *this;
  for (auto& x : s.entries_) x *= c;
  return s;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::size_t ExactMatrixHash::operator()(const ExactMatrix& m) const noexcept {
  std::size_t h = m.rows() * 1000003u + m.cols();
  for (const auto& q : m.entries()) {
    auto num = static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t()));
    auto den = static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t()));
    h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "mat_mul: " + std::to_string(a.rows()) + "x" +
                                             std::to_string(a.cols()) + " times " +
                                             std::to_string(b.rows()) + "x" +
                                             std::to_string(b.cols()));
  }
  ExactMatrix p(a.rows(), b.cols());
  Rational tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        p(i, j) += tmp;
      }
    }
  }
  return p;
}

namespace {

// Fraction-free forward elimination in place. Returns the pivot columns and
// the number of row swaps performed.
struct Elimination {
  std::vector<std::size_t> pivot_cols;
  std::size_t swaps = 0;
};

Elimination bareiss(ExactMatrix& m) {
  Elimination e;
  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      ++e.swaps;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t mat_rank(const ExactMatrix& a) {
  ExactMatrix m = a;
  return bareiss(m).pivot_cols.size();
}

Rational determinant(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  ExactMatrix m = a;
  Elimination e = bareiss(m);
  if (e.pivot_cols.size() < a.rows()) return 0;
  Rational d = m(a.rows() - 1, a.cols() - 1);
  return e.swaps % 2 ? Rational(-d) : d;
}

ExactMatrix mat_inverse(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  ExactMatrix m = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) throw Error(Errc::SingularMatrix, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    Rational scale = 1 / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
  // Reduced row echelon form, then one basis vector per free column.
  ExactMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational scale = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0, k = 0; c < m.cols(); ++c) {
    if (k < pivots.size() && pivots[k] == c) ++k;
    else free.push_back(c);
  }
  ExactMatrix basis(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -m(i, free[f]);
  }
  return basis;
}

ExactPoly det_one_minus_t(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "det(I - t a) of non-square matrix");
  // Faddeev-LeVerrier gives det(xI - a) = sum c_k x^k; det(I - t a) is its reversal.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    ExactMatrix am = mat_mul(a, m);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::reverse(c.begin(), c.end());
  return ExactPoly(std::move(c));
}

ExactMatrix dual(const ExactMatrix& a) { return mat_inverse(a).transpose(); }

nlohmann::json to_json(const ExactMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::Parse, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(Errc::Parse, "ragged matrix rows");
    for (const auto& v : row) {
      if (v.is_string()) entries.push_back(parse_rational(v.get<std::string>()));
      else if (v.is_number_integer()) entries.emplace_back(v.get<long>());
      else throw Error(Errc::Parse, "matrix entries must be exact strings or integers");
    }
  }
  return ExactMatrix(rows, cols, std::move(entries));
}

nlohmann::json to_json(const ExactPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

}  // namespace weylcomp
