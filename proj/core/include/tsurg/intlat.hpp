#pragma once

// Exact integer linear algebra: extended gcd, dense integer matrices,
// determinants, Smith normal form, completion of primitive vectors to
// unimodular matrices, and abelian-group extraction from presentation
// matrices. Everything is computed over arbitrary-precision integers;
// nothing here may round or overflow.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tsurg/errors.hpp"

namespace tsurg {

using Int = mpz_class;

struct ExtGcd {
  Int g;  // gcd(|a|, |b|) >= 0; gcd(0, 0) = 0
  Int x;
  Int y;  // a*x + b*y = g
};

// Extended Euclid with the half-normalized cofactors of mpz_gcdext;
// ext_gcd(0, 0) returns (0, 0, 0).
ExtGcd ext_gcd(const Int& a, const Int& b);

// Dense row-major integer matrix. Empty shapes (0 x n, n x 0) are permitted.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant by Bareiss fraction-free elimination.
// Throws DimensionMismatch for non-square input; det of the 0x0 matrix is 1.
Int determinant(const IntMatrix& m);

// True iff m is square with determinant +-1.
bool is_unimodular(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal with nonnegative
// entries satisfying d1 | d2 | ... (zeros trailing).
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// A 3x3 unimodular matrix whose last column equals v; deterministic.
// Throws NonPrimitiveVector unless gcd of the entries is 1.
IntMatrix complete_to_unimodular(const std::array<Int, 3>& v);

// Finitely generated abelian group in invariant-factor form: Z^rank plus
// Z/d1 + Z/d2 + ... with 2 <= d1 | d2 | ...
class AbelianGroup {
public:
  AbelianGroup() = default;  // trivial group
  AbelianGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

  static AbelianGroup free_of_rank(std::size_t rank);
  // Z/|n|, with Z/0 = Z and Z/1 the trivial group.
  static AbelianGroup cyclic(const Int& order);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_torsion_free() const noexcept { return factors_.empty(); }

  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2 + Z/6", ...

  bool operator==(const AbelianGroup& other) const = default;

private:
  std::size_t free_rank_ = 0;
  std::vector<Int> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

// Cokernel of m acting on Z^generators, where each row of m is the exponent
// vector of one relator. Throws DimensionMismatch if m has the wrong width.
AbelianGroup abelian_group_from_presentation_matrix(const IntMatrix& m,
                                                    std::size_t generators);

}  // namespace tsurg
