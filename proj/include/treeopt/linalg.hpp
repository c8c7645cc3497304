#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "treeopt/graph.hpp"

namespace treeopt {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int order);

  static IntMatrix identity(int order);
  static IntMatrix all_ones(int order);

  int order() const noexcept { return order_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * order_ + j]; }
  const BigInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * order_ + j]; }

  BigInt trace() const;
  /// Matrix with row and column `k` removed.
  IntMatrix without(int k) const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator*(const BigInt& s, const IntMatrix& x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int order_;
  std::vector<BigInt> a_;
};

/// tr(X * Y) without forming the product.
BigInt trace_of_product(const IntMatrix& x, const IntMatrix& y);

/// Integer polynomial, coefficients in ascending degree order.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt eval(const BigInt& x) const;
  std::string to_string() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);

/// det(xI - mat) by the division-free Berkowitz recurrence.
CharPoly char_poly(const IntMatrix& mat);

/// Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& mat);

/// Kirchhoff: a principal cofactor of the Laplacian.
BigInt spanning_tree_count(const Graph& g);

/// n^{-2} times the Laplacian characteristic polynomial of the complement,
/// evaluated at n. Throws InternalFault if the division is not exact.
BigInt tree_count_via_complement(const Graph& g);

/// [tr(M^1), ..., tr(M^kmax)].
std::vector<BigInt> trace_powers(const IntMatrix& mat, int kmax);

/// Newton's identities in both directions for a monic degree-n polynomial.
CharPoly char_poly_from_power_sums(std::span<const BigInt> power_sums);
std::vector<BigInt> power_sums_from_char_poly(const CharPoly& poly, int kmax);

/// True iff every root of poly is real and lies in [lo, hi] (Sturm sequence
/// of the square-free part, exact rationals).
bool roots_real_in(const CharPoly& poly, const BigInt& lo, const BigInt& hi);

std::string to_decimal(const BigInt& x);
std::string to_decimal(const BigRational& x);

}  // namespace treeopt
