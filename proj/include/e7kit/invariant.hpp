#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "e7kit/abelian2.hpp"
#include "e7kit/f2.hpp"

namespace e7kit::inv {

// Element of F2[a_0..a_{n-1}] / (a_i^2), the invariant ring of n independent
// order-2 classes over a base where -1 is a square. Terms are square-free
// monomials stored as bitmasks, kept sorted and duplicate-free.
class SquareFreePoly {
 public:
  explicit SquareFreePoly(int nvars);  // zero
  static SquareFreePoly zero(int nvars) { return SquareFreePoly(nvars); }
  static SquareFreePoly one(int nvars);
  static SquareFreePoly variable(int nvars, int i);
  static SquareFreePoly linear(const f2::Vec& coeffs);
  static SquareFreePoly from_terms(int nvars, std::vector<std::uint32_t> terms);

  int nvars() const { return nvars_; }
  const std::vector<std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max term degree, -1 when zero

  SquareFreePoly piece(int d) const;         // homogeneous degree-d part
  SquareFreePoly truncated(int maxdeg) const;

  SquareFreePoly operator+(const SquareFreePoly& o) const;
  SquareFreePoly operator*(const SquareFreePoly& o) const;
  bool operator==(const SquareFreePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const SquareFreePoly& o) const { return !(*this == o); }

  std::string str() const;  // e.g. "1 + a0*a2 + a1*a2"

 private:
  int nvars_;
  std::vector<std::uint32_t> terms_;
};

// product with every term of degree > maxdeg dropped (maxdeg < 0: exact)
SquareFreePoly mul_capped(const SquareFreePoly& a, const SquareFreePoly& b, int maxdeg);

// elementary symmetric polynomial of the variables, by direct enumeration
// of the C(n, d) square-free monomials
SquareFreePoly sigma(int nvars, int d);

// elementary symmetric polynomial of arbitrary ring elements in nvars
// variables, by the product recurrence E[j] += E[j-1] * x
SquareFreePoly elementary_symmetric(int nvars, const std::vector<SquareFreePoly>& xs,
                                    int d, int maxdeg = -1);

// Substitution along a group homomorphism F2^cols -> F2^rows given by m:
// variable i of p maps to the linear form with coefficients row i of m.
// p must have m.rows() variables; the result has m.cols() variables.
// Contravariant: pullback(n, pullback(m, p)) == pullback(m * n, p).
SquareFreePoly pullback(const f2::Mat& m, const SquareFreePoly& p);

// Total Stiefel-Whitney class of the permutation representation described
// by an orbit report: the product over all orbits and all nonzero orbit
// characters chi of (1 + chi), in the report's generator variables.
SquareFreePoly sw_total_of_perm_rep(const ab2::ActionReport& report, int maxdeg = -1);

// degree-d piece of the above
SquareFreePoly sw_piece(const ab2::ActionReport& report, int d);

// Presentation metadata for the two invariant modules the torsor machinery
// targets. Degrees are sorted; labels are positional.
struct ModuleTable {
  std::string name;
  std::vector<int> degrees;
  std::vector<std::string> labels;
  std::string note;
};

const ModuleTable& sp6_module_table();   // degrees {0,2,3,4,6}
const ModuleTable& we7_module_table();   // degrees {0,1,2,3,3,4,4,5,6,7}

}  // namespace e7kit::inv
