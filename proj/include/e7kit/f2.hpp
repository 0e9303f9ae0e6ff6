#pragma once
// Dense linear algebra over F2 for small dimensions (<= 63).
// Vectors are bit-packed in a single word, matrices are arrays of row words.
// Everything is exact; there is no floating point anywhere in this library.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace e7kit::f2 {

inline bool parity64(uint64_t w) { return std::popcount(w) & 1; }

class Vec {
public:
  Vec() = default;
  Vec(int len, uint64_t bits) : len_(len), bits_(bits) {
    if (len < 0 || len > 63) throw std::invalid_argument("f2::Vec: length out of range");
    if (len < 64 && (bits >> len) != 0) throw std::invalid_argument("f2::Vec: stray bits");
  }
  static Vec zero(int len) { return Vec(len, 0); }
  static Vec unit(int len, int i) { Vec v(len, 0); v.set(i, true); return v; }

  int size() const { return len_; }
  uint64_t bits() const { return bits_; }
  bool get(int i) const {
    check_index(i);
    return (bits_ >> i) & 1;
  }
  Vec& set(int i, bool v) {
    check_index(i);
    if (v) bits_ |= (uint64_t{1} << i); else bits_ &= ~(uint64_t{1} << i);
    return *this;
  }
  Vec operator+(const Vec& o) const {
    check_len(o);
    return Vec(len_, bits_ ^ o.bits_);
  }
  Vec& operator+=(const Vec& o) { *this = *this + o; return *this; }
  bool dot(const Vec& o) const {
    check_len(o);
    return parity64(bits_ & o.bits_);
  }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }

  bool operator==(const Vec& o) const { return len_ == o.len_ && bits_ == o.bits_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
  // Order on the packed encoding; used wherever a deterministic order is needed.
  bool operator<(const Vec& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return bits_ < o.bits_;
  }

  // Hex serialization, coordinate 0 at the most significant bit of the first digit.
  std::string hex() const;
  static Vec from_hex(int len, const std::string& s);

private:
  void check_index(int i) const {
    if (i < 0 || i >= len_) throw std::out_of_range("f2::Vec: index");
  }
  void check_len(const Vec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("f2::Vec: length mismatch");
  }
  int len_ = 0;
  uint64_t bits_ = 0;
};

class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
    if (rows < 0 || cols < 0 || cols > 63) throw std::invalid_argument("f2::Mat: shape");
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int i, int j) const {
    check(i, j);
    return (row_[i] >> j) & 1;
  }
  void set(int i, int j, bool v) {
    check(i, j);
    if (v) row_[i] |= (uint64_t{1} << j); else row_[i] &= ~(uint64_t{1} << j);
  }
  Vec row(int i) const {
    if (i < 0 || i >= rows_) throw std::out_of_range("f2::Mat: row");
    return Vec(cols_, row_[i]);
  }
  void set_row(int i, const Vec& v) {
    if (i < 0 || i >= rows_ || v.size() != cols_) throw std::invalid_argument("f2::Mat: set_row");
    row_[i] = v.bits();
  }
  Vec col(int j) const {
    Vec v(rows_, 0);
    for (int i = 0; i < rows_; ++i) v.set(i, get(i, j));
    return v;
  }

  // Column-vector action: (M v)_i = <row i, v>.
  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("f2::Mat: apply shape");
    Vec out(rows_, 0);
    for (int i = 0; i < rows_; ++i) out.set(i, parity64(row_[i] & v.bits()));
    return out;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("f2::Mat: mul shape");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      uint64_t acc = 0, r = row_[i];
      while (r) {
        int k = std::countr_zero(r);
        r &= r - 1;
        acc ^= o.row_[k];
      }
      out.row_[i] = acc;
    }
    return out;
  }
  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("f2::Mat: add shape");
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.row_[i] = row_[i] ^ o.row_[i];
    return out;
  }
  Mat transposed() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (get(i, j)) out.set(j, i, true);
    return out;
  }

  int rank() const;
  Mat inverse() const;  // throws std::domain_error if singular
  std::vector<Vec> kernel_basis() const;
  // One solution of A x = b; returns false if inconsistent.
  static bool solve(const Mat& A, const Vec& b, Vec& x);

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Row-major bit packing for hashing; requires rows*cols <= 64.
  uint64_t pack() const {
    if (rows_ * cols_ > 64) throw std::invalid_argument("f2::Mat: pack overflow");
    uint64_t k = 0;
    for (int i = 0; i < rows_; ++i) k |= row_[i] << (i * cols_);
    return k;
  }

private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("f2::Mat: index");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<uint64_t> row_;
};

// Rank of a set of vectors (all the same length).
int span_rank(const std::vector<Vec>& vs);

// Splits a space carrying an alternating bilinear form B (given by its Gram
// matrix, B symmetric with zero diagonal mod 2) into hyperbolic pairs plus a
// radical.  Vectors are returned as coordinate vectors in the original basis;
// pairing(e[i], f[j]) = [i==j], pairs are orthogonal to each other and to the
// radical.  The procedure is deterministic: it always picks the least index
// pair that still pairs to 1.
struct SymplecticSplit {
  std::vector<Vec> e, f, radical;
};
SymplecticSplit symplectic_split(const Mat& gram);

}  // namespace e7kit::f2
