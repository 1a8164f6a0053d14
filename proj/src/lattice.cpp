#include "endo/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace endo {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<RationalVector> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == Rational(0)) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[k], a[p]);
    const Rational pivot = a[k][k];
    for (auto& x : a[k]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k] == Rational(0)) continue;
      const Rational f = a[r][k];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[k][c];
    }
  }
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const auto inv = rational_inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (inv[r][c].denominator() != 1) throw std::domain_error("matrix is not unimodular");
      out(r, c) = inv[r][c].numerator();
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row a -= f * row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, Int f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) -= f * m(b, c);
}
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, Int f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) -= f * m(r, b);
}
void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntVector SmithForm::divisors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = s.d;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    for (;;) {
      std::size_t pr = m, pc = n;
      Int best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (d(r, c) != 0 && (best == 0 || std::abs(d(r, c)) < best)) {
            best = std::abs(d(r, c));
            pr = r;
            pc = c;
          }
      if (pr == m) return s;  // trailing block is zero
      swap_rows(d, t, pr);
      swap_rows(s.u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(s.v, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        const Int q = floor_div(d(r, t), d(t, t));
        row_axpy(d, r, t, q);
        row_axpy(s.u, r, t, q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const Int q = floor_div(d(t, c), d(t, t));
        col_axpy(d, c, t, q);
        col_axpy(s.v, c, t, q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row.
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(r, c) % d(t, t) != 0) {
            row_axpy(d, t, r, -1);
            row_axpy(s.u, t, r, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
  }
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  // With D = U A V, ker A = V * ker D, and ker D is spanned by the trailing
  // unit vectors past rank(D).
  const SmithForm s = smith_normal_form(a);
  const std::size_t rank = s.divisors().size();
  IntMatrix k(a.cols(), a.cols() - rank);
  for (std::size_t j = rank; j < a.cols(); ++j)
    for (std::size_t r = 0; r < a.cols(); ++r) k(r, j - rank) = s.v(r, j);
  return k;
}

std::vector<RationalVector> lattice_basis(const std::vector<RationalVector>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  Int denom = 1;
  for (const auto& g : generators)
    for (const auto& x : g) denom = std::lcm(denom, x.denominator());
  IntMatrix m(generators.size(), n);
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational scaled = generators[r][c] * denom;
      m(r, c) = scaled.numerator();
    }
  // Row echelon form by unimodular row operations (Hermite style).
  std::size_t lead = 0;
  for (std::size_t c = 0; c < n && lead < m.rows(); ++c) {
    for (;;) {
      std::size_t pr = m.rows();
      for (std::size_t r = lead; r < m.rows(); ++r)
        if (m(r, c) != 0 && (pr == m.rows() || std::abs(m(r, c)) < std::abs(m(pr, c)))) pr = r;
      if (pr == m.rows()) break;
      swap_rows(m, lead, pr);
      bool done = true;
      for (std::size_t r = lead + 1; r < m.rows(); ++r) {
        row_axpy(m, r, lead, floor_div(m(r, c), m(lead, c)));
        if (m(r, c) != 0) done = false;
      }
      if (done) {
        if (m(lead, c) < 0) negate_row(m, lead);
        for (std::size_t r = 0; r < lead; ++r) row_axpy(m, r, lead, floor_div(m(r, c), m(lead, c)));
        ++lead;
        break;
      }
    }
  }
  std::vector<RationalVector> basis;
  for (std::size_t r = 0; r < lead; ++r) {
    RationalVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = Rational(m(r, c), denom);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector negate(IntVector a) {
  for (auto& x : a) x = -x;
  return a;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Rational frac(const Rational& x) {
  const Int fl = floor_div(x.numerator(), x.denominator());
  return x - Rational(fl);
}

}  // namespace endo
