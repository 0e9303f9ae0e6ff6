#pragma once
// Symplectic F2 spaces of genus g (dimension 2g), quadratic refinements of the
// standard alternating form, the Arf invariant, and Aronhold bases.
//
// Coordinates run (e_1..e_g, f_1..f_g); the form pairs <e_i,f_i> = 1, all
// other basis pairs 0.  A quadratic refinement satisfies
//   q(x+y) + q(x) + q(y) = <x,y>,
// and translating by a vector v gives (q+v)(x) = q(x) + <v,x>.  Every
// refinement of the standard form is q0 + linear, where q0(x) = sum x_i x_{g+i},
// so a form is stored by the diagonal of its upper triangular coefficient
// matrix; the off diagonal part is forced by the polarization identity.

#include <cstdint>
#include <random>
#include <vector>

#include "e7kit/errors.hpp"
#include "e7kit/f2.hpp"

namespace e7kit::sym {

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int g) : g_(g) {
    if (g < 1 || g > 16) throw std::invalid_argument("SymplecticSpace: genus out of range");
  }
  int g() const { return g_; }
  int dim() const { return 2 * g_; }
  f2::Mat gram() const {
    f2::Mat m(dim(), dim());
    for (int i = 0; i < g_; ++i) {
      m.set(i, g_ + i, true);
      m.set(g_ + i, i, true);
    }
    return m;
  }
  f2::Vec e(int i) const { return f2::Vec::unit(dim(), check(i)); }
  f2::Vec f(int i) const { return f2::Vec::unit(dim(), g_ + check(i)); }
  bool pairing(const f2::Vec& u, const f2::Vec& v) const { return u.dot(omega(v)); }
  // Gram matrix application; swaps the e and f halves.
  f2::Vec omega(const f2::Vec& v) const {
    if (v.size() != dim()) throw std::invalid_argument("SymplecticSpace: omega length");
    uint64_t lo = v.bits() & ((uint64_t{1} << g_) - 1);
    uint64_t hi = v.bits() >> g_;
    return f2::Vec(dim(), (lo << g_) | hi);
  }
  bool operator==(const SymplecticSpace& o) const { return g_ == o.g_; }
  bool operator!=(const SymplecticSpace& o) const { return g_ != o.g_; }

 private:
  int check(int i) const {
    if (i < 0 || i >= g_) throw std::out_of_range("SymplecticSpace: basis index");
    return i;
  }
  int g_;
};

class QuadraticForm {
 public:
  // q = q0 + sum_i diag_i x_i; diag is the coefficient matrix diagonal.
  QuadraticForm(const SymplecticSpace& s, const f2::Vec& diag) : space_(s), diag_(diag) {
    if (diag.size() != s.dim()) throw std::invalid_argument("QuadraticForm: diag length");
  }
  static QuadraticForm base(const SymplecticSpace& s) {
    return QuadraticForm(s, f2::Vec::zero(s.dim()));
  }
  // Reconstructs the refinement with the given values on the standard basis
  // (q0 vanishes on every basis vector, so the values are the diagonal).
  static QuadraticForm from_values_on_basis(const SymplecticSpace& s, const f2::Vec& values) {
    return QuadraticForm(s, values);
  }
  static QuadraticForm from_coeffs(const SymplecticSpace& s, const f2::Mat& upper);
  // The refinement vanishing on two complementary Lagrangians: write
  // x = x1 + x2 along span(basis1) + span(basis2) and set q(x) = <x1,x2>.
  static QuadraticForm from_isotropic_pair(const SymplecticSpace& s,
                                           const std::vector<f2::Vec>& basis1,
                                           const std::vector<f2::Vec>& basis2);

  const SymplecticSpace& space() const { return space_; }
  f2::Vec diag() const { return diag_; }
  f2::Mat coeffs() const;  // upper triangular 2g x 2g

  bool eval(const f2::Vec& x) const {
    if (x.size() != space_.dim()) throw std::invalid_argument("QuadraticForm: eval length");
    uint64_t lo = x.bits() & ((uint64_t{1} << space_.g()) - 1);
    uint64_t hi = x.bits() >> space_.g();
    return f2::parity64(lo & hi) ^ f2::parity64(diag_.bits() & x.bits());
  }
  QuadraticForm translate(const f2::Vec& v) const {
    // (q+v)(x) = q(x) + <v,x>, so the diagonal moves by omega(v).
    return QuadraticForm(space_, diag_ + space_.omega(v));
  }
  // The vector v with other = *this + v.
  f2::Vec difference(const QuadraticForm& other) const {
    if (space_ != other.space_) throw std::invalid_argument("QuadraticForm: space mismatch");
    return space_.omega(diag_ + other.diag_);
  }
  // Translation from the base form: *this = q0 + w.
  f2::Vec from_base() const { return space_.omega(diag_); }

  // Arf invariant, sum of q(e_i) q(f_i) over the standard basis.
  bool arf() const {
    uint64_t lo = diag_.bits() & ((uint64_t{1} << space_.g()) - 1);
    uint64_t hi = diag_.bits() >> space_.g();
    return f2::parity64(lo & hi);
  }
  // Exhaustive count of zeros; 2^{2g} evaluations.
  uint64_t zero_count() const;

  // Hex of the packed upper triangular coefficients, row major, most
  // significant bit = (row 1, col 1).
  std::string hex() const;
  static QuadraticForm from_hex(const SymplecticSpace& s, const std::string& h);

  bool operator==(const QuadraticForm& o) const {
    return space_ == o.space_ && diag_ == o.diag_;
  }
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }
  bool operator<(const QuadraticForm& o) const {
    if (space_ != o.space_) return space_.g() < o.space_.g();
    return hex() < o.hex();
  }

 private:
  SymplecticSpace space_;
  f2::Vec diag_;
};

// Element of the (2g+1)-dimensional space V u QV: a parity bit plus data.
// Parity 0 with data v is the vector v; parity 1 with data w is the form
// q0 + w.  Addition is componentwise.
class WElement {
 public:
  WElement(bool parity, const f2::Vec& data) : parity_(parity), data_(data) {}
  static WElement from_vector(const f2::Vec& v) { return WElement(false, v); }
  static WElement from_form(const QuadraticForm& q) { return WElement(true, q.from_base()); }

  bool parity() const { return parity_; }
  const f2::Vec& data() const { return data_; }
  bool is_form() const { return parity_; }
  f2::Vec to_vector() const {
    if (parity_) throw std::logic_error("WElement: form is not a vector");
    return data_;
  }
  QuadraticForm to_form(const SymplecticSpace& s) const {
    if (!parity_) throw std::logic_error("WElement: vector is not a form");
    return QuadraticForm::base(s).translate(data_);
  }
  WElement operator+(const WElement& o) const {
    return WElement(parity_ ^ o.parity_, data_ + o.data_);
  }
  // Embedding into F2^{2g+1} (parity at the top coordinate), for rank checks.
  f2::Vec lift() const {
    f2::Vec v(data_.size() + 1, data_.bits());
    v.set(data_.size(), parity_);
    return v;
  }
  bool operator==(const WElement& o) const { return parity_ == o.parity_ && data_ == o.data_; }

 private:
  bool parity_;
  f2::Vec data_;
};

class Symplectomorphism {
 public:
  Symplectomorphism(const SymplecticSpace& s, const f2::Mat& m);
  static Symplectomorphism identity(const SymplecticSpace& s) {
    return Symplectomorphism(s, f2::Mat::identity(s.dim()));
  }
  // x -> x + <x,v> v.
  static Symplectomorphism transvection(const SymplecticSpace& s, const f2::Vec& v);

  const SymplecticSpace& space() const { return space_; }
  const f2::Mat& matrix() const { return mat_; }

  f2::Vec apply(const f2::Vec& v) const { return mat_.apply(v); }
  // (s.q)(x) = q(s^{-1} x).
  QuadraticForm apply(const QuadraticForm& q) const;
  WElement apply(const WElement& w) const;

  Symplectomorphism operator*(const Symplectomorphism& o) const {
    return Symplectomorphism(space_, mat_ * o.mat_, unchecked{});
  }
  Symplectomorphism inverse() const;

  bool operator==(const Symplectomorphism& o) const { return mat_ == o.mat_; }
  bool operator!=(const Symplectomorphism& o) const { return !(*this == o); }

 private:
  struct unchecked {};
  Symplectomorphism(const SymplecticSpace& s, const f2::Mat& m, unchecked)
      : space_(s), mat_(m) {}
  SymplecticSpace space_;
  f2::Mat mat_;
};

struct AronholdBasis {
  SymplecticSpace space;
  std::vector<QuadraticForm> forms;  // 2g+1 of them
};

// Arf value shared by all members of an Aronhold basis: 0 for g = 0,1 mod 4,
// 1 for g = 2,3 mod 4.
inline bool arf_epsilon(int g) {
  int r = g % 4;
  return r == 2 || r == 3;
}

// Full validation: 2g+1 forms, independent in V u QV, and every sum over an
// odd subset S has Arf invariant arf_epsilon(g) + (|S|-1)/2 mod 2.
bool is_aronhold(const AronholdBasis& basis);

// e_i = q_{2i-1} + q_{2i}, f_i = q_1 + ... + q_{2i-1} + q_{2g+1}; returns
// (e_1..e_g, f_1..f_g), validated to pair as a symplectic basis.
std::vector<f2::Vec> aronhold_to_symplectic(const AronholdBasis& basis);

// Unique Aronhold basis mapping to the given symplectic basis; inverse of the
// conversion above.
AronholdBasis symplectic_to_aronhold(const SymplecticSpace& s,
                                     const std::vector<f2::Vec>& basis);

// All 2^{2g} refinements of the standard form, sorted by their hex encoding.
// Budget: g <= 4.
std::vector<QuadraticForm> enumerate_forms(int g);

// All (ordered) Aronhold bases, by pruned backtracking over forms of the
// right Arf value.  Budget: g <= 2.
std::vector<AronholdBasis> all_aronhold_bases(int g);

// |Sp_2g(F2)| = 2^{g^2} prod_{i=1..g} (4^i - 1).
uint64_t sp_order(int g);

// All elements of Sp_2g(F2) by closure under transvections.  Budget: g <= 3.
std::vector<f2::Mat> sp_elements(int g);

// Deterministic pseudo random element: product of `steps` transvections drawn
// from the given engine.
Symplectomorphism random_sp_element(const SymplecticSpace& s, std::mt19937_64& rng,
                                    int steps = 32);

}  // namespace e7kit::sym
