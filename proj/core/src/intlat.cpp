#include "tsurg/intlat.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace tsurg {

ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  if (sgn(a) == 0 && sgn(b) == 0) return r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      raise(ErrorCode::DimensionMismatch, "ragged row in matrix literal");
    std::size_t j = 0;
    for (long e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      raise(ErrorCode::DimensionMismatch, "ragged row in matrix data");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    raise(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << "]";
}

Int determinant(const IntMatrix& m) {
  if (!m.is_square())
    raise(ErrorCode::DimensionMismatch, "determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

namespace {

using Pivot = std::pair<std::size_t, std::size_t>;

// Entry of smallest nonzero absolute value in the trailing submatrix
// d[t.., t..]; first such position in row-major order.
std::optional<Pivot> min_abs_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& e = d(i, j);
      if (sgn(e) == 0) continue;
      if (!best ||
          mpz_cmpabs(e.get_mpz_t(), d(best->first, best->second).get_mpz_t()) < 0)
        best = Pivot{i, j};
    }
  return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  SnfDecomposition r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& u = r.U;
  IntMatrix& d = r.D;
  IntMatrix& v = r.V;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      auto piv = min_abs_nonzero(d, t);
      if (!piv) break;  // trailing submatrix is zero
      d.swap_rows(t, piv->first);
      u.swap_rows(t, piv->first);
      d.swap_cols(t, piv->second);
      v.swap_cols(t, piv->second);

      // One Euclid pass clearing column t and row t against the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (sgn(q) != 0) {
          Int f = -q;
          d.add_row_multiple(i, t, f);
          u.add_row_multiple(i, t, f);
        }
        if (sgn(d(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (sgn(q) != 0) {
          Int f = -q;
          d.add_col_multiple(j, t, f);
          v.add_col_multiple(j, t, f);
        }
        if (sgn(d(t, j)) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot is alone in its row and column; pull in any entry of the
      // trailing submatrix it does not divide yet.
      std::optional<Pivot> bad;
      for (std::size_t i = t + 1; i < d.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !bad; ++j)
          if (sgn(d(i, j) % d(t, t)) != 0) bad = Pivot{i, j};
      if (!bad) break;
      d.add_row_multiple(t, bad->first, 1);
      u.add_row_multiple(t, bad->first, 1);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return r;
}

namespace {

Int cofactor_3x3(const IntMatrix& m, std::size_t r, std::size_t c) {
  std::size_t r0 = r == 0 ? 1 : 0, r1 = r == 2 ? 1 : 2;
  std::size_t c0 = c == 0 ? 1 : 0, c1 = c == 2 ? 1 : 2;
  Int minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  return ((r + c) % 2 == 0) ? minor : Int(-minor);
}

// Inverse of a 3x3 matrix with determinant +-1: det * adjugate.
IntMatrix unimodular_inverse_3x3(const IntMatrix& m) {
  Int det = determinant(m);
  IntMatrix inv(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) inv(i, j) = det * cofactor_3x3(m, j, i);
  return inv;
}

}  // namespace

IntMatrix complete_to_unimodular(const std::array<Int, 3>& v) {
  Int g = gcd(gcd(v[0], v[1]), v[2]);
  if (g != 1) {
    std::ostringstream os;
    os << "vector (" << v[0] << ", " << v[1] << ", " << v[2]
       << ") is not primitive: gcd = " << g;
    raise(ErrorCode::NonPrimitiveVector, os.str());
  }

  // Row-reduce v to e3 with unimodular row operations, accumulating them in
  // u; the completion is then u^-1, whose last column is v.
  IntMatrix u = IntMatrix::identity(3);
  std::array<Int, 3> w = v;
  auto fold = [&](std::size_t i, std::size_t j) {
    if (sgn(w[i]) == 0) return;
    ExtGcd e = ext_gcd(w[i], w[j]);
    Int ai = w[i] / e.g;
    Int aj = w[j] / e.g;
    for (std::size_t c = 0; c < 3; ++c) {
      Int ri = u(i, c), rj = u(j, c);
      u(i, c) = aj * ri - ai * rj;
      u(j, c) = e.x * ri + e.y * rj;
    }
    w[i] = 0;
    w[j] = e.g;
  };
  fold(0, 1);
  fold(1, 2);
  if (w[2] == -1) u.negate_row(2);
  return unimodular_inverse_3x3(u);
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && sgn(factors_[i] % factors_[i - 1]) != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::free_of_rank(std::size_t rank) {
  return AbelianGroup(rank, {});
}

AbelianGroup AbelianGroup::cyclic(const Int& order) {
  Int n = abs(order);
  if (sgn(n) == 0) return free_of_rank(1);
  if (n == 1) return AbelianGroup();
  return AbelianGroup(0, {n});
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const Int& f : factors_) {
    if (!first) os << " + ";
    os << "Z/" << f;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) {
  return os << g.to_string();
}

AbelianGroup abelian_group_from_presentation_matrix(const IntMatrix& m,
                                                    std::size_t generators) {
  if (m.cols() != generators) {
    std::ostringstream os;
    os << "presentation matrix has " << m.cols() << " columns but " << generators
       << " generators were given";
    raise(ErrorCode::DimensionMismatch, os.str());
  }
  SnfDecomposition snf = smith_normal_form(m);
  std::size_t rank = 0;
  std::vector<Int> factors;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < lim; ++i) {
    const Int& di = snf.D(i, i);
    if (sgn(di) == 0) break;
    ++rank;
    if (di > 1) factors.push_back(di);
  }
  return AbelianGroup(generators - rank, std::move(factors));
}

}  // namespace tsurg
