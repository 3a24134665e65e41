#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "calex/bigint.hpp"
#include "calex/error.hpp"

namespace calex {

/// Dense row-major integer matrix; either dimension may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = big(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> column(std::size_t j) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
    }
  }
  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  /// [A | B]
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "hconcat row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(k, j) != 0) m(i, j) += aik * b(k, j);
        }
      }
    }
    return m;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorKind::InvalidArgument, "matrix difference shape mismatch");
    }
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  std::vector<BigInt> operator*(const std::vector<BigInt>& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
      }
    }
    return y;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

/// A = U * S * V with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r > 0.
/// `U_inv` is kept so that membership queries need no further elimination.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix S;
  IntMatrix V;  // empty (0x0) when column transforms were not requested
  std::vector<BigInt> diagonal;  // the nonzero d_i, in order
  bool has_column_transform = true;

  std::size_t rank() const noexcept { return diagonal.size(); }

  /// Is x in the column span of A?
  bool in_column_span(const std::vector<BigInt>& x) const {
    const std::vector<BigInt> y = U_inv * x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i < diagonal.size()) {
        if (!divides(diagonal[i], y[i])) return false;
      } else if (y[i] != 0) {
        return false;
      }
    }
    return true;
  }
};

namespace detail {

// Locates the smallest-absolute-value nonzero entry with row, col >= t
// (ties broken by row-major position).
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      const BigInt& v = a(i, j);
      if (v == 0) continue;
      if (!best || cmp_abs(v, best_abs) < 0) {
        best = {i, j};
        best_abs = abs(v);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Deterministic Smith normal form with recorded unimodular transforms.
inline SmithDecomposition smith_normal_form(const IntMatrix& input, bool column_transform = true) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix L = IntMatrix::identity(rows);  // L * A * R = S
  IntMatrix U = IntMatrix::identity(rows);  // U = L^-1
  IntMatrix V = column_transform ? IntMatrix::identity(cols) : IntMatrix{};  // V = R^-1

  // Row operation E applied on the left: A <- E A, L <- E L, U <- U E^-1.
  auto row_swap = [&](std::size_t i, std::size_t k) {
    a.swap_rows(i, k);
    L.swap_rows(i, k);
    U.swap_cols(i, k);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // row dst += q row src
    a.add_row(dst, src, q);
    L.add_row(dst, src, q);
    U.add_col(src, dst, -q);
  };
  auto row_negate = [&](std::size_t i) {
    a.negate_row(i);
    L.negate_row(i);
    U.negate_col(i);
  };
  // Column operation F on the right: A <- A F, V <- F^-1 V.
  auto col_swap = [&](std::size_t j, std::size_t k) {
    a.swap_cols(j, k);
    if (column_transform) V.swap_rows(j, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // col dst += q col src
    a.add_col(dst, src, q);
    if (column_transform) V.add_row(src, dst, -q);
  };

  std::vector<BigInt> diagonal;
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = detail::smallest_entry(a, t);
    if (!pivot) break;
    row_swap(t, pivot->first);
    col_swap(t, pivot->second);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -detail::floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -detail::floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) != 0 && cmp_abs(a(i, t), a(bi, bj)) < 0) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) != 0 && cmp_abs(a(t, j), a(bi, bj)) < 0) { bi = t; bj = j; }
        }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Divisibility: pull an offending row into row t and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!divides(a(t, t), a(i, j))) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a(t, t) < 0) row_negate(t);
    diagonal.push_back(a(t, t));
  }

  SmithDecomposition out;
  out.U = std::move(U);
  out.U_inv = std::move(L);
  out.S = std::move(a);
  out.V = std::move(V);
  out.diagonal = std::move(diagonal);
  out.has_column_transform = column_transform;
  return out;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups as cokernels

class FgAbelianGroup;
inline FgAbelianGroup cokernel(const IntMatrix& relations);

/// Z^N / colspan(R), with the Smith coordinates retained for endomorphism work.
/// Effective coordinates are the Smith coordinates whose cyclic factor is not
/// trivial: first the torsion ones (d_i >= 2), then the free ones.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  const std::vector<BigInt>& invariant_factors() const noexcept { return invariant_factors_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t ambient_rank() const noexcept { return relations_.rows(); }
  const IntMatrix& relations() const noexcept { return relations_; }
  const SmithDecomposition& smith() const noexcept { return smith_; }

  bool is_trivial() const noexcept { return invariant_factors_.empty() && free_rank_ == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Group order for finite groups.
  std::optional<BigInt> order() const {
    if (!is_finite()) return std::nullopt;
    BigInt n = 1;
    for (const auto& d : invariant_factors_) n *= d;
    return n;
  }

  /// Number of effective coordinates (torsion + free).
  std::size_t dimension() const noexcept { return coords_.size(); }

  /// Modulus of effective coordinate c: d_i >= 2 for torsion, 0 for free.
  const std::vector<BigInt>& moduli() const noexcept { return moduli_; }

  /// Ambient vector -> effective coordinates (reduced).
  std::vector<BigInt> project(const std::vector<BigInt>& x) const {
    const std::vector<BigInt> y = smith_.U_inv * x;
    std::vector<BigInt> out(coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c) out[c] = reduce(c, y[coords_[c]]);
    return out;
  }

  /// Effective coordinate c -> ambient representative.
  std::vector<BigInt> lift(std::size_t c) const {
    return smith_.U.column(coords_[c]);
  }

  BigInt reduce(std::size_t c, const BigInt& v) const {
    return moduli_[c] == 0 ? v : mod_pos(v, moduli_[c]);
  }

  friend FgAbelianGroup cokernel(const IntMatrix& relations);

 private:
  std::vector<BigInt> invariant_factors_;
  std::size_t free_rank_ = 0;
  IntMatrix relations_;
  SmithDecomposition smith_;
  std::vector<std::size_t> coords_;  // Smith coordinate index of each effective coordinate
  std::vector<BigInt> moduli_;
};

/// Z^N / colspan(R) for an N x c relation matrix R.
inline FgAbelianGroup cokernel(const IntMatrix& relations) {
  FgAbelianGroup g;
  g.relations_ = relations;
  g.smith_ = smith_normal_form(relations, /*column_transform=*/false);
  const std::size_t n = relations.rows();
  const auto& diag = g.smith_.diagonal;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] != 1) {
      g.invariant_factors_.push_back(diag[i]);
      g.coords_.push_back(i);
      g.moduli_.push_back(diag[i]);
    }
  }
  for (std::size_t i = diag.size(); i < n; ++i) {
    g.coords_.push_back(i);
    g.moduli_.push_back(0);
  }
  g.free_rank_ = n - diag.size();
  return g;
}

/// Cokernel of the diagonal presentation Z^n / (d_1 Z + ...); 0 entries give free summands.
inline FgAbelianGroup cokernel_of_diagonal(const std::vector<BigInt>& moduli) {
  IntMatrix r(moduli.size(), moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) r(i, i) = moduli[i];
  return cokernel(r);
}

/// Endomorphism of an FgAbelianGroup, stored in its effective coordinates.
class GroupEndo {
 public:
  GroupEndo() = default;
  GroupEndo(FgAbelianGroup group, IntMatrix matrix) : group_(std::move(group)), matrix_(std::move(matrix)) {
    reduce_rows();
  }

  const FgAbelianGroup& group() const noexcept { return group_; }
  /// Action on effective coordinates (column c = image of coordinate c).
  const IntMatrix& matrix() const noexcept { return matrix_; }

  std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
    std::vector<BigInt> y = matrix_ * x;
    for (std::size_t c = 0; c < y.size(); ++c) y[c] = group_.reduce(c, y[c]);
    return y;
  }

  GroupEndo compose(const GroupEndo& inner) const { return {group_, matrix_ * inner.matrix_}; }

  GroupEndo minus_identity() const {
    IntMatrix m = matrix_;
    for (std::size_t c = 0; c < m.rows(); ++c) m(c, c) -= 1;
    return {group_, m};
  }

  GroupEndo power(std::int64_t e) const {
    GroupEndo result(group_, IntMatrix::identity(matrix_.rows()));
    GroupEndo base = *this;
    while (e > 0) {
      if (e & 1) result = base.compose(result);
      e >>= 1;
      if (e) base = base.compose(base);
    }
    return result;
  }

  bool is_identity() const { return minus_identity().is_zero(); }
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const GroupEndo& a, const GroupEndo& b) { return a.matrix_ == b.matrix_; }

 private:
  void reduce_rows() {
    for (std::size_t c = 0; c < matrix_.rows(); ++c) {
      for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(c, j) = group_.reduce(c, matrix_(c, j));
    }
  }

  FgAbelianGroup group_;
  IntMatrix matrix_;
};

/// Endomorphism of Z^N / colspan(R) induced by an N x N matrix T.
inline GroupEndo induced_endo(const IntMatrix& T, const FgAbelianGroup& g) {
  const std::size_t n = g.ambient_rank();
  if (T.rows() != n || T.cols() != n) {
    throw Error(ErrorKind::InvalidArgument, "endomorphism matrix does not match the ambient rank");
  }
  const IntMatrix& R = g.relations();
  const IntMatrix image = T * R;
  for (std::size_t j = 0; j < image.cols(); ++j) {
    if (!g.smith().in_column_span(image.column(j))) {
      throw Error(ErrorKind::NotEquivariant,
                  "matrix does not preserve the relation span (column " + std::to_string(j) + ")");
    }
  }
  const std::size_t e = g.dimension();
  IntMatrix m(e, e);
  for (std::size_t c = 0; c < e; ++c) {
    const std::vector<BigInt> col = g.project(T * g.lift(c));
    for (std::size_t r = 0; r < e; ++r) m(r, c) = col[r];
  }
  return {g, m};
}

/// Surjectivity (hence bijectivity, the group being Noetherian): the image of
/// the endomorphism together with the relations spans everything.
inline bool is_automorphism(const GroupEndo& e) {
  const auto& moduli = e.group().moduli();
  const std::size_t n = moduli.size();
  IntMatrix block(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(i, j) = e.matrix()(i, j);
    block(i, n + i) = moduli[i];
  }
  const SmithDecomposition s = smith_normal_form(block, false);
  if (s.rank() != n) return false;
  return std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const BigInt& d) { return d == 1; });
}

/// Smallest d <= bound with e^d = id, if any.
inline std::optional<std::int64_t> endo_order(const GroupEndo& e, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "order bound must be >= 1");
  GroupEndo p = e;
  for (std::int64_t d = 1; d <= bound; ++d) {
    if (p.is_identity()) return d;
    p = e.compose(p);
  }
  return std::nullopt;
}

/// Cokernel of an endomorphism: G / im(e).
inline FgAbelianGroup endo_cokernel(const GroupEndo& e) {
  const auto& moduli = e.group().moduli();
  const std::size_t n = moduli.size();
  IntMatrix block(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(i, j) = e.matrix()(i, j);
    block(i, n + i) = moduli[i];
  }
  return cokernel(block);
}

// ---------------------------------------------------------------------------
// Primary decomposition

/// Prime factorization by trial division; throws when the cofactor is too
/// large to finish within the trial bound.
inline std::map<BigInt, unsigned> factor_integer(BigInt n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorization needs a positive integer");
  std::map<BigInt, unsigned> out;
  BigInt p = 2;
  std::uint64_t steps = 0;
  while (p * p <= n) {
    while (divides(p, n)) {
      n /= p;
      ++out[p];
    }
    p += (p == 2) ? 1 : 2;
    if (++steps > 50'000'000ULL) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
      throw Error(ErrorKind::InvalidArgument, "integer too large to factor by trial division");
    }
  }
  if (n > 1) ++out[n];
  return out;
}

/// Invariant factors refactored into prime-power cyclic orders, largest first per prime.
inline std::map<BigInt, std::vector<BigInt>> primary_decomposition(const FgAbelianGroup& g) {
  if (!g.is_finite()) throw Error(ErrorKind::NotFinite, "primary decomposition needs a finite group");
  std::map<BigInt, std::vector<BigInt>> out;
  for (const auto& d : g.invariant_factors()) {
    for (const auto& [p, e] : factor_integer(d)) out[p].push_back(ipow(p, e));
  }
  for (auto& [p, parts] : out) {
    std::sort(parts.begin(), parts.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
  }
  return out;
}

/// Invariant factors (ascending chain, units dropped) of a direct sum of cyclic groups.
inline std::vector<BigInt> invariant_factors_of_cyclics(const std::vector<BigInt>& orders) {
  std::map<BigInt, std::vector<BigInt>> by_prime;
  for (const auto& d : orders) {
    if (d == 0) throw Error(ErrorKind::NotFinite, "free summand among cyclic orders");
    if (d == 1) continue;
    for (const auto& [p, e] : factor_integer(d)) by_prime[p].push_back(ipow(p, e));
  }
  std::size_t len = 0;
  for (auto& [p, parts] : by_prime) {
    std::sort(parts.begin(), parts.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
    len = std::max(len, parts.size());
  }
  std::vector<BigInt> chain(len, BigInt(1));  // chain[0] is the largest
  for (const auto& [p, parts] : by_prime) {
    for (std::size_t i = 0; i < parts.size(); ++i) chain[i] *= parts[i];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace calex
