#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace endo {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

/// Dense row-major integer matrix. Small (rank <= 8) by construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;
  auto operator<=>(const IntMatrix& rhs) const = default;

  bool is_identity() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Exact inverse over the rationals; throws std::domain_error if singular.
std::vector<RationalVector> rational_inverse(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Smith normal form D = U * A * V with U, V unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  /// Nonzero diagonal entries, each dividing the next.
  IntVector divisors() const;
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Column basis of the saturated integer kernel {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Column-style Hermite basis of the lattice spanned by the given rational
/// generators (rows of the result are basis vectors).
std::vector<RationalVector> lattice_basis(const std::vector<RationalVector>& generators);

Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector negate(IntVector a);
bool is_zero(const IntVector& v);

/// Reduce x into [0, 1).
Rational frac(const Rational& x);

}  // namespace endo
