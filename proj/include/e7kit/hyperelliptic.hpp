#pragma once

#include <cstdint>
#include <vector>

#include "e7kit/f2.hpp"
#include "e7kit/perm.hpp"
#include "e7kit/symplectic.hpp"

namespace e7kit::hyp {

// F2 model on 2g+2 marked points: V = even-cardinality subsets modulo
// complement, paired by |S meet T| mod 2. The classes u_i = {i, i+1} for
// i = 1..2g form a basis whose gram matrix is the path graph; a symplectic
// split of that basis identifies V with the standard genus-g space.
class HyperellipticModel {
 public:
  explicit HyperellipticModel(int g);  // 1..4

  int genus() const { return g_; }
  int marked_points() const { return 2 * g_ + 2; }
  sym::SymplecticSpace space() const { return sym::SymplecticSpace(g_); }

  // class of {a, b}, 0-based marked points, in standard coordinates
  f2::Vec pair_class(int a, int b) const;

  // the symplectic matrix induced by a permutation of the marked points
  sym::Symplectomorphism to_symplectic(const perm::Permutation& pi) const;

  // number of distinct images over all (2g+2)! permutations (g <= 3)
  std::uint64_t image_size() const;

  // (0 1), (2 3), ..., the g+1 disjoint transpositions
  std::vector<perm::Permutation> disjoint_transpositions() const;

  std::vector<sym::QuadraticForm> odd_forms() const;  // sorted by encoding
  // images of the disjoint transpositions on the sorted odd forms
  std::vector<perm::Permutation> odd_form_action() const;

 private:
  int g_;
  f2::Mat from_std_;  // standard coordinates -> u-basis coordinates
  f2::Mat to_std_;

  f2::Vec pair_class_u(int a, int b) const;  // in u-basis coordinates
};

}  // namespace e7kit::hyp
