#include "e7kit/f2.hpp"

namespace e7kit::f2 {

std::string Vec::hex() const {
  // b0 b1 ... b(len-1), zero padded at the tail to a whole number of digits.
  int digits = (len_ + 3) / 4;
  std::string out;
  out.reserve(digits);
  for (int d = 0; d < digits; ++d) {
    int nib = 0;
    for (int k = 0; k < 4; ++k) {
      int i = 4 * d + k;
      nib <<= 1;
      if (i < len_ && get(i)) nib |= 1;
    }
    out.push_back("0123456789abcdef"[nib]);
  }
  return out;
}

Vec Vec::from_hex(int len, const std::string& s) {
  int digits = (len + 3) / 4;
  if ((int)s.size() != digits) throw std::invalid_argument("f2::Vec: hex length");
  Vec v(len, 0);
  for (int d = 0; d < digits; ++d) {
    char c = s[d];
    int nib;
    if (c >= '0' && c <= '9') nib = c - '0';
    else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
    else throw std::invalid_argument("f2::Vec: hex digit");
    for (int k = 0; k < 4; ++k) {
      int i = 4 * d + k;
      bool bit = (nib >> (3 - k)) & 1;
      if (i < len) v.set(i, bit);
      else if (bit) throw std::invalid_argument("f2::Vec: hex padding");
    }
  }
  return v;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m((int)rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) m.set_row((int)i, rows[i]);
  return m;
}

namespace {
// Row echelon on a copy; returns pivot columns.  rows is modified in place.
std::vector<int> echelon(std::vector<uint64_t>& rows, int cols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !((rows[p] >> c) & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace

int Mat::rank() const {
  std::vector<uint64_t> rows = row_;
  return (int)echelon(rows, cols_).size();
}

int span_rank(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  std::vector<uint64_t> rows;
  rows.reserve(vs.size());
  for (const Vec& v : vs) {
    if (v.size() != vs[0].size()) throw std::invalid_argument("f2::span_rank: mixed lengths");
    rows.push_back(v.bits());
  }
  return (int)echelon(rows, vs[0].size()).size();
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("f2::Mat: inverse of nonsquare");
  int n = rows_;
  // Augment with the identity in the high bits.
  std::vector<uint64_t> rows = row_;
  for (int i = 0; i < n; ++i) rows[i] |= uint64_t{1} << (cols_ + i);
  if (2 * n > 64) {
    // Fall back to a two-matrix sweep for widths that do not fit one word.
    Mat a = *this, inv = Mat::identity(n);
    for (int c = 0, r = 0; c < n; ++c, ++r) {
      int p = r;
      while (p < n && !a.get(p, c)) ++p;
      if (p == n) throw std::domain_error("f2::Mat: singular");
      std::swap(a.row_[r], a.row_[p]);
      std::swap(inv.row_[r], inv.row_[p]);
      for (int i = 0; i < n; ++i)
        if (i != r && a.get(i, c)) { a.row_[i] ^= a.row_[r]; inv.row_[i] ^= inv.row_[r]; }
    }
    return inv;
  }
  std::vector<int> pivots = echelon(rows, n);
  if ((int)pivots.size() != n) throw std::domain_error("f2::Mat: singular");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) inv.row_[i] = rows[i] >> n;
  return inv;
}

std::vector<Vec> Mat::kernel_basis() const {
  std::vector<uint64_t> rows = row_;
  std::vector<int> pivots = echelon(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_, 0);
    v.set(c, true);
    for (size_t r = 0; r < pivots.size(); ++r)
      if (r < rows.size() && ((rows[r] >> c) & 1)) v.set(pivots[r], true);
    basis.push_back(v);
  }
  return basis;
}

bool Mat::solve(const Mat& A, const Vec& b, Vec& x) {
  if (b.size() != A.rows_) throw std::invalid_argument("f2::Mat: solve shape");
  if (A.cols_ + 1 > 63) throw std::invalid_argument("f2::Mat: solve width");
  std::vector<uint64_t> rows = A.row_;
  for (int i = 0; i < A.rows_; ++i)
    if (b.get(i)) rows[i] |= uint64_t{1} << A.cols_;
  std::vector<int> pivots = echelon(rows, A.cols_ + 1);
  x = Vec::zero(A.cols_);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == A.cols_) return false;  // 0 = 1 row
    if ((rows[r] >> A.cols_) & 1) x.set(pivots[r], true);
  }
  return true;
}

SymplecticSplit symplectic_split(const Mat& gram) {
  int n = gram.rows();
  if (gram.cols() != n) throw std::invalid_argument("symplectic_split: nonsquare gram");
  for (int i = 0; i < n; ++i) {
    if (gram.get(i, i)) throw std::invalid_argument("symplectic_split: nonalternating gram");
    for (int j = 0; j < n; ++j)
      if (gram.get(i, j) != gram.get(j, i))
        throw std::invalid_argument("symplectic_split: asymmetric gram");
  }
  auto pair = [&gram](const Vec& a, const Vec& b) { return gram.apply(b).dot(a); };

  std::vector<Vec> work;
  for (int i = 0; i < n; ++i) work.push_back(Vec::unit(n, i));
  SymplecticSplit out;
  for (;;) {
    int ei = -1, fi = -1;
    for (size_t i = 0; i < work.size() && ei < 0; ++i)
      for (size_t j = i + 1; j < work.size(); ++j)
        if (pair(work[i], work[j])) { ei = (int)i; fi = (int)j; break; }
    if (ei < 0) break;
    Vec e = work[ei], f = work[fi];
    work.erase(work.begin() + fi);
    work.erase(work.begin() + ei);
    for (Vec& v : work) {
      if (pair(v, f)) v += e;
      if (pair(v, e)) v += f;
    }
    out.e.push_back(e);
    out.f.push_back(f);
  }
  for (const Vec& v : work)
    if (!v.is_zero()) out.radical.push_back(v);
  return out;
}

}  // namespace e7kit::f2
