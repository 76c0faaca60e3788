#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace vk {

/// Dense GF(2) vector packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) noexcept { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVector& operator^=(const BitVector& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const noexcept;
  std::size_t count() const noexcept;
  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;
  /// Parity of the AND with `o`.
  bool dot(const BitVector& o) const noexcept;
  std::vector<std::size_t> ones() const;

  const std::vector<std::uint64_t>& words() const noexcept { return w_; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Row-major bit-packed matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { data_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r].flip(c); }
  const BitVector& row(std::size_t r) const noexcept { return data_[r]; }

  BitVector multiply(const BitVector& x) const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  Gf2Matrix transpose() const;
  bool is_zero() const noexcept;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVector> data_;
};

/// Rank over GF(2).
std::size_t rank(const Gf2Matrix& m);

/// Some x with m·x = b, or nullopt. Pivots are the leftmost available column,
/// ties broken by the lowest row; free variables are set to zero.
std::optional<BitVector> solve(const Gf2Matrix& m, const BitVector& b);

/// Null-space basis, one vector per free column in ascending column order.
std::vector<BitVector> kernel_basis(const Gf2Matrix& m);

using BigInt = boost::multiprecision::mpz_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// Nonzero invariant factors d_1 | d_2 | ... (all positive).
std::vector<BigInt> smith_normal_form(IntMatrix m);

}  // namespace vk
