#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e7kit/f2.hpp"
#include "e7kit/symplectic.hpp"

namespace e7kit::lat {

// Integer vector in coordinates (H, E_1, ..., E_n), n = 9 - degree.
using Ivec = std::vector<std::int64_t>;

Ivec add(const Ivec& a, const Ivec& b);
Ivec sub(const Ivec& a, const Ivec& b);
Ivec neg(const Ivec& a);
Ivec scale(std::int64_t c, const Ivec& a);

// Determinant of a square integer matrix (fraction-free elimination).
std::int64_t int_det(std::vector<Ivec> rows);

// Solves sum_j c_j * columns[j] = rhs exactly; nullopt when there is no
// integer solution (inconsistent, underdetermined on the support, or the
// unique rational solution is non-integral).
std::optional<Ivec> solve_linear_integer(const std::vector<Ivec>& columns, const Ivec& rhs);

struct RootType {
  std::string tag;           // "ZIJ", "ZIJK", "ZI", "OTHER"
  int hsign = 0;             // sign of the H coefficient (0 for ZIJ)
  std::vector<int> indices;  // 1-based blown-up point labels, see docs/conventions.md
};

struct ExceptionalType {
  std::string tag;  // "E", "HEE", "2H5E", "3H2E6E"
  std::vector<int> indices;
};

// Rank 10-d unimodular lattice with basis (H, E_1, ..., E_{9-d}) and
// pairing diag(1, -1, ..., -1); K = -3H + sum E_i.
class PicardLattice {
 public:
  explicit PicardLattice(int degree);  // 1..7

  int degree() const { return degree_; }
  int points() const { return 9 - degree_; }
  int rank() const { return 10 - degree_; }

  Ivec H() const;
  Ivec E(int i) const;  // 1-based
  Ivec canonical() const;
  std::int64_t pair(const Ivec& a, const Ivec& b) const;

  // x + (x . root) root; requires root^2 == -2
  Ivec reflect(const Ivec& root, const Ivec& x) const;

  // K-orthogonal classes of square -2, lexicographically sorted.
  std::vector<Ivec> roots() const;
  // Same set found by bounded coordinate search (degree >= 2).
  std::vector<Ivec> roots_blind() const;

  // Classes with e^2 = e.K = -1, lexicographically sorted (degree >= 2).
  std::vector<Ivec> exceptional_classes() const;
  std::vector<Ivec> exceptional_blind() const;

  // -K - e; degree 2 only, where it is an involution of the 56 classes.
  Ivec geiser(const Ivec& e) const;

  // alpha_0 = H - E1 - E2 - E3 (when n >= 3), alpha_i = E_i - E_{i+1};
  // a basis of the K-orthogonal sublattice for degree 2..6.
  std::vector<Ivec> simple_roots() const;
  Ivec decompose_in_simple_roots(const Ivec& x) const;

  RootType root_type(const Ivec& root) const;
  ExceptionalType exceptional_type(const Ivec& e) const;

 private:
  int degree_;
  void check_dim(const Ivec& a) const;
};

// K-orthogonal sublattice reduced mod 2: the pairing becomes alternating,
// its radical is the class of 2e + K (e exceptional), and the quotient by
// the radical is a standard symplectic F2 space of genus g.
struct Mod2Quotient {
  PicardLattice lattice;
  std::vector<Ivec> simple;        // coordinate basis of the sublattice
  f2::Mat gram2;                   // pairing of the basis mod 2
  std::vector<f2::Vec> radical;    // basis of the radical, simple-root coords
  int g;                           // quotient dimension = 2g
  f2::Mat proj;                    // 2g x rank, kills the radical
  f2::Mat section;                 // rank x 2g, proj * section = id

  sym::SymplecticSpace space() const { return sym::SymplecticSpace(g); }
  f2::Vec reduce_coords(const f2::Vec& simple_coords) const;
  f2::Vec reduce(const Ivec& x) const;  // decompose, mod 2, project
  f2::Mat push_matrix(const f2::Mat& m_on_simple) const;
};

Mod2Quotient orthogonal_complement_mod2(const PicardLattice& lattice);

}  // namespace e7kit::lat
