#include "vk/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace vk {

bool BitVector::any() const noexcept {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= n_) return n_;
  std::size_t k = from >> 6;
  std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return i < n_ ? i : n_;
    }
    if (++k >= w_.size()) return n_;
    w = w_[k];
  }
}

bool BitVector::dot(const BitVector& o) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_next(0); i < n_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].dot(x)) y.set(r);
  return y;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  Gf2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = data_[r].find_next(0); k < cols_; k = data_[r].find_next(k + 1))
      out.data_[r] ^= other.data_[k];
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = data_[r].find_next(0); c < cols_; c = data_[r].find_next(c + 1))
      out.set(c, r);
  return out;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::none_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.any(); });
}

namespace {

/// Row-reduced echelon form with the pivot columns, applying the same row
/// operations to an optional right-hand side.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<std::size_t> pivot_cols;
  BitVector rhs;
};

Echelon reduce(const Gf2Matrix& m, const BitVector* b, bool full) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(m.row(r));
  if (b) e.rhs = *b;
  const std::size_t nrows = m.rows();
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < nrows; ++col) {
    std::size_t sel = prow;
    while (sel < nrows && !e.rows[sel].get(col)) ++sel;
    if (sel == nrows) continue;
    if (sel != prow) {
      std::swap(e.rows[sel], e.rows[prow]);
      if (b) {
        bool a = e.rhs.get(sel), c = e.rhs.get(prow);
        e.rhs.set(sel, c);
        e.rhs.set(prow, a);
      }
    }
    const std::size_t start = full ? 0 : prow + 1;
    for (std::size_t r = start; r < nrows; ++r) {
      if (r == prow || !e.rows[r].get(col)) continue;
      e.rows[r] ^= e.rows[prow];
      if (b && e.rhs.get(prow)) e.rhs.flip(r);
    }
    e.pivot_cols.push_back(col);
    ++prow;
  }
  return e;
}

}  // namespace

std::size_t rank(const Gf2Matrix& m) { return reduce(m, nullptr, false).pivot_cols.size(); }

std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b) {
  Echelon e = reduce(m, &b, true);
  const std::size_t r = e.pivot_cols.size();
  for (std::size_t i = r; i < m.rows(); ++i)
    if (e.rhs.get(i)) return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t i = 0; i < r; ++i)
    if (e.rhs.get(i)) x.set(e.pivot_cols[i]);
  return x;
}

std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  Echelon e = reduce(m, nullptr, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      if (e.rows[i].get(f)) x.set(e.pivot_cols[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix a) {
  std::vector<BigInt> factors;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t t = 0;
  while (t < R && t < C) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pr = R, pc = C;
    BigInt best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const BigInt& v = a(i, j);
        if (v == 0) continue;
        BigInt m = abs(v);
        if (pr == R || m < best) {
          best = m;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    if (pr == R) break;
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < C; ++j)
          if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          swap_rows(a, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < R; ++i)
          if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          swap_cols(a, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold an offending row into the pivot row and repeat.
      for (std::size_t i = t + 1; i < R && !dirty; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < C; ++k) a(t, k) += a(i, k);
            dirty = true;
            break;
          }
    }
    factors.push_back(abs(a(t, t)));
    ++t;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace vk
