#ifndef WREATHLAB_INTMATRIX_HPP_
#define WREATHLAB_INTMATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "quotient.hpp"

namespace wreathlab {

  /// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
  class CheckedInt64 {
   public:
    constexpr CheckedInt64() = default;
    constexpr CheckedInt64(std::int64_t v) : _v(v) {}  // NOLINT

    constexpr std::int64_t value() const noexcept {
      return _v;
    }

    friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
      std::int64_t r = 0;
      if (__builtin_add_overflow(a._v, b._v, &r)) {
        throw Overflow("checked int64 addition overflowed");
      }
      return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
      std::int64_t r = 0;
      if (__builtin_sub_overflow(a._v, b._v, &r)) {
        throw Overflow("checked int64 subtraction overflowed");
      }
      return r;
    }
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
      std::int64_t r = 0;
      if (__builtin_mul_overflow(a._v, b._v, &r)) {
        throw Overflow("checked int64 multiplication overflowed");
      }
      return r;
    }
    friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
      if (b._v == 0) {
        throw InvalidArgument("division by zero");
      }
      if (a._v == std::numeric_limits<std::int64_t>::min() && b._v == -1) {
        throw Overflow("checked int64 division overflowed");
      }
      return a._v / b._v;
    }
    CheckedInt64 operator-() const {
      return CheckedInt64(0) - *this;
    }
    CheckedInt64& operator+=(CheckedInt64 b) {
      return *this = *this + b;
    }
    CheckedInt64& operator-=(CheckedInt64 b) {
      return *this = *this - b;
    }

    friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;

    friend std::ostream& operator<<(std::ostream& os, CheckedInt64 x) {
      return os << x._v;
    }

   private:
    std::int64_t _v = 0;
  };

  inline BigInt to_big(BigInt const& x) {
    return x;
  }
  inline BigInt to_big(CheckedInt64 x) {
    return BigInt(x.value());
  }

  /// Dense row-major integer matrix.
  template <class Int>
  class BasicIntMatrix {
   public:
    BasicIntMatrix() = default;
    BasicIntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Int(0)) {}

    BasicIntMatrix(std::vector<std::vector<std::int64_t>> const& rows)
        : _rows(rows.size()), _cols(rows.empty() ? 0 : rows.front().size()) {
      _data.reserve(_rows * _cols);
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw InvalidArgument("BasicIntMatrix: ragged rows");
        }
        for (auto v : r) {
          _data.push_back(Int(v));
        }
      }
    }

    static BasicIntMatrix identity(std::size_t n) {
      BasicIntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Int(1);
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Int& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Int const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
      if (a != b) {
        for (std::size_t j = 0; j < _cols; ++j) {
          std::swap((*this)(a, j), (*this)(b, j));
        }
      }
    }
    void swap_cols(std::size_t a, std::size_t b) {
      if (a != b) {
        for (std::size_t i = 0; i < _rows; ++i) {
          std::swap((*this)(i, a), (*this)(i, b));
        }
      }
    }
    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, Int const& k) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(dst, j) = (*this)(dst, j) + k * (*this)(src, j);
      }
    }
    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, Int const& k) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, dst) = (*this)(i, dst) + k * (*this)(i, src);
      }
    }
    void negate_row(std::size_t r) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(r, j) = -(*this)(r, j);
      }
    }

    bool is_zero() const {
      for (auto const& v : _data) {
        if (v != Int(0)) {
          return false;
        }
      }
      return true;
    }

    friend BasicIntMatrix operator*(BasicIntMatrix const& a,
                                    BasicIntMatrix const& b) {
      if (a._cols != b._rows) {
        throw InvalidArgument("matrix product: dimension mismatch");
      }
      BasicIntMatrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          if (a(i, k) == Int(0)) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) = c(i, j) + a(i, k) * b(k, j);
          }
        }
      }
      return c;
    }

    friend bool operator==(BasicIntMatrix const&, BasicIntMatrix const&) = default;

    std::string to_string() const {
      std::string s = "[";
      for (std::size_t i = 0; i < _rows; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < _cols; ++j) {
          s += (j ? ", " : "") + to_big((*this)(i, j)).str();
        }
        s += "]";
      }
      return s + "]";
    }

   private:
    std::size_t      _rows = 0;
    std::size_t      _cols = 0;
    std::vector<Int> _data;
  };

  using IntMatrix        = BasicIntMatrix<BigInt>;
  using CheckedIntMatrix = BasicIntMatrix<CheckedInt64>;

  template <class Int>
  struct BasicSNFResult {
    BasicIntMatrix<Int> D;
    BasicIntMatrix<Int> U;
    BasicIntMatrix<Int> V;
  };

  using SNFResult = BasicSNFResult<BigInt>;

  namespace detail {
    template <class Int>
    Int magnitude(Int const& x) {
      return x < Int(0) ? -x : x;
    }

    template <class Int>
    BasicSNFResult<Int> checked_snf(BasicSNFResult<Int> r,
                                    BasicIntMatrix<Int> const& m) {
      if (!(r.U * m * r.V == r.D)) {
        throw InternalInconsistency("smith_normal_form: U M V differs from D");
      }
      return r;
    }
  }  // namespace detail

  /// D = U M V with U, V unimodular and d1 | d2 | ... on the diagonal,
  /// non-negative, zeros last.  The pivot is always the entry of least
  /// non-zero absolute value in the unfinished block, first in row-major
  /// order on ties, so U and V are reproducible.  The product U M V is
  /// recomputed before returning.
  template <class Int>
  BasicSNFResult<Int> smith_normal_form(BasicIntMatrix<Int> const& m) {
    std::size_t const   rows = m.rows();
    std::size_t const   cols = m.cols();
    BasicSNFResult<Int> r{m, BasicIntMatrix<Int>::identity(rows),
                          BasicIntMatrix<Int>::identity(cols)};
    auto& d = r.D;
    Int const zero(0);

    for (std::size_t t = 0; t < rows && t < cols; ++t) {
      while (true) {
        bool        found = false;
        std::size_t pi = t, pj = t;
        Int         best(0);
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (d(i, j) != zero) {
              Int a = detail::magnitude(d(i, j));
              if (!found || a < best) {
                found = true;
                best  = a;
                pi    = i;
                pj    = j;
              }
            }
          }
        }
        if (!found) {
          return detail::checked_snf(std::move(r), m);
        }
        d.swap_rows(t, pi);
        r.U.swap_rows(t, pi);
        d.swap_cols(t, pj);
        r.V.swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d(i, t) != zero) {
            Int q = d(i, t) / d(t, t);
            d.add_row(i, t, -q);
            r.U.add_row(i, t, -q);
            clean = clean && d(i, t) == zero;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(t, j) != zero) {
            Int q = d(t, j) / d(t, t);
            d.add_col(j, t, -q);
            r.V.add_col(j, t, -q);
            clean = clean && d(t, j) == zero;
          }
        }
        if (!clean) {
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            Int q = d(i, j) / d(t, t);
            if (q * d(t, t) != d(i, j)) {
              d.add_row(t, i, Int(1));
              r.U.add_row(t, i, Int(1));
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      if (d(t, t) < zero) {
        d.negate_row(t);
        r.U.negate_row(t);
      }
    }
    return detail::checked_snf(std::move(r), m);
  }

  /// Exact determinant by fraction-free (Bareiss) elimination.
  template <class Int>
  BigInt determinant(BasicIntMatrix<Int> const& m) {
    if (m.rows() != m.cols()) {
      throw InvalidArgument("determinant: matrix is not square");
    }
    std::size_t const n = m.rows();
    IntMatrix         a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = to_big(m(i, j));
      }
    }
    BigInt prev = 1;
    int    sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
  }

  /// Abelian invariants of the cokernel of m (rows are relations, columns
  /// generators).
  template <class Int>
  AbelianInvariants cokernel_invariants(BasicIntMatrix<Int> const& m) {
    auto const        snf = smith_normal_form(m);
    AbelianInvariants inv;
    std::size_t const diag = std::min(m.rows(), m.cols());
    inv.free_rank = m.cols() - diag;
    for (std::size_t i = 0; i < diag; ++i) {
      BigInt v = to_big(snf.D(i, i));
      if (v == 0) {
        ++inv.free_rank;
      } else if (v > 1) {
        inv.torsion.push_back(v);
      }
    }
    return inv;
  }

}  // namespace wreathlab

#endif  // WREATHLAB_INTMATRIX_HPP_
