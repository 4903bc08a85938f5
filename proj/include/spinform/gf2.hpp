#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "spinform/errors.hpp"

namespace spinform {

inline int parity64(std::uint64_t w) { return std::popcount(w) & 1; }

// Vector over GF(2), packed into one machine word. Rank is capped at 64,
// which covers every surface handled here; closure searches multiply
// millions of these, so the representation stays a single uint64.
struct Gf2Vec {
  std::uint64_t bits = 0;
  int size = 0;

  Gf2Vec() = default;
  Gf2Vec(std::uint64_t b, int n) : bits(b), size(n) {}

  static Gf2Vec zero(int n) { return Gf2Vec{0, n}; }
  static Gf2Vec unit(int i, int n) { return Gf2Vec{std::uint64_t{1} << i, n}; }

  int get(int i) const { return int((bits >> i) & 1u); }
  void set(int i, int v) {
    const std::uint64_t m = std::uint64_t{1} << i;
    bits = v ? (bits | m) : (bits & ~m);
  }

  bool is_zero() const { return bits == 0; }

  Gf2Vec operator+(const Gf2Vec& o) const {
    if (size != o.size) throw DimensionError("gf2 vector size mismatch");
    return Gf2Vec{bits ^ o.bits, size};
  }

  bool operator==(const Gf2Vec& o) const = default;

  std::string to_string() const {
    std::string s;
    s.reserve(size_t(size));
    for (int i = 0; i < size; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }
};

// Dense GF(2) matrix with rows packed as machine words (up to 64 columns).
class Gf2Mat {
 public:
  Gf2Mat() = default;
  Gf2Mat(int rows, int cols) : rows_(rows), cols_(cols), row_(size_t(rows), 0) {
    if (rows < 0 || cols < 0 || cols > 64) throw DimensionError("gf2 matrix shape");
  }

  static Gf2Mat identity(int n) {
    Gf2Mat m(n, n);
    for (int i = 0; i < n; ++i) m.row_[size_t(i)] = std::uint64_t{1} << i;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int i, int j) const { return int((row_[size_t(i)] >> j) & 1u); }
  void set(int i, int j, int v) {
    const std::uint64_t m = std::uint64_t{1} << j;
    auto& r = row_[size_t(i)];
    r = v ? (r | m) : (r & ~m);
  }

  std::uint64_t row_bits(int i) const { return row_[size_t(i)]; }
  void set_row(int i, std::uint64_t bits) { row_[size_t(i)] = bits; }

  // y = M x  (x as column vector).
  Gf2Vec apply(const Gf2Vec& x) const {
    if (x.size != cols_) throw DimensionError("gf2 apply size mismatch");
    Gf2Vec y = Gf2Vec::zero(rows_);
    for (int i = 0; i < rows_; ++i)
      if (parity64(row_[size_t(i)] & x.bits)) y.bits |= std::uint64_t{1} << i;
    return y;
  }

  Gf2Mat operator*(const Gf2Mat& b) const {
    if (cols_ != b.rows_) throw DimensionError("gf2 product shape mismatch");
    Gf2Mat c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      std::uint64_t r = row_[size_t(i)];
      while (r) {
        const int j = std::countr_zero(r);
        r &= r - 1;
        acc ^= b.row_[size_t(j)];
      }
      c.row_[size_t(i)] = acc;
    }
    return c;
  }

  Gf2Mat transposed() const {
    Gf2Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      std::uint64_t r = row_[size_t(i)];
      while (r) {
        const int j = std::countr_zero(r);
        r &= r - 1;
        t.row_[size_t(j)] |= std::uint64_t{1} << i;
      }
    }
    return t;
  }

  Gf2Vec column(int j) const {
    Gf2Vec c = Gf2Vec::zero(rows_);
    for (int i = 0; i < rows_; ++i)
      if (get(i, j)) c.bits |= std::uint64_t{1} << i;
    return c;
  }

  bool operator==(const Gf2Mat& o) const = default;

  // Byte-per-row packing for square matrices of rank <= 8; used as the
  // hash-set key during subgroup closure.
  std::uint64_t key8() const {
    std::uint64_t k = 0;
    for (int i = 0; i < rows_; ++i) k |= row_[size_t(i)] << (8 * i);
    return k;
  }

  static Gf2Mat from_key8(std::uint64_t key, int n) {
    Gf2Mat m(n, n);
    for (int i = 0; i < n; ++i) m.row_[size_t(i)] = (key >> (8 * i)) & 0xffu;
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> row_;
};

}  // namespace spinform
