#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "e7kit/lattice.hpp"
#include "e7kit/perm.hpp"
#include "e7kit/symplectic.hpp"

namespace e7kit::weyl {

// Pairing-preserving integer matrix on the Picard basis that fixes K,
// stored column-wise.
class WeylElement {
 public:
  WeylElement(lat::PicardLattice lattice, std::vector<lat::Ivec> columns);

  static WeylElement identity(const lat::PicardLattice& lattice);
  static WeylElement reflection(const lat::PicardLattice& lattice, const lat::Ivec& root);

  const lat::PicardLattice& lattice() const { return lattice_; }
  const std::vector<lat::Ivec>& columns() const { return cols_; }

  lat::Ivec apply(const lat::Ivec& x) const;
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return cols_ == o.cols_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool is_identity() const;

  int sign() const;  // determinant, always +1 or -1

 private:
  lat::PicardLattice lattice_;
  std::vector<lat::Ivec> cols_;
  struct unchecked {};
  WeylElement(lat::PicardLattice lattice, std::vector<lat::Ivec> columns, unchecked);
};

// x -> (x.K) K - x: negation of the K-orthogonal part (degree 2, K^2 = 2)
WeylElement iota(const lat::PicardLattice& lattice);

struct Frame {
  std::vector<int> root_indices;  // into the sorted root list
  std::vector<lat::Ivec> roots;
};

// The reflection group of a Picard lattice with its actions on roots,
// exceptional classes, their Geiser pairs, and the mod-2 quotient.
class WeylGroup {
 public:
  explicit WeylGroup(lat::PicardLattice lattice);

  const lat::PicardLattice& lattice() const { return lattice_; }
  const std::vector<lat::Ivec>& roots() const { return roots_; }
  const std::vector<WeylElement>& simple_reflections() const { return simple_refl_; }
  int root_index(const lat::Ivec& root) const;

  const perm::PermGroup& root_action() const;
  std::uint64_t order() const;
  perm::Permutation root_permutation(const WeylElement& w) const;
  bool contains(const WeylElement& w) const;

  // permutations of the roots commuting with the whole group; the action
  // is faithful and transitive, so this computes the center
  std::vector<perm::Permutation> center_permutations() const;

  // order by breadth-first closure over the matrices themselves;
  // throws budget_error once more than max_elements appear
  std::uint64_t closure_order(std::uint64_t max_elements) const;

  // degree >= 2
  const std::vector<lat::Ivec>& exceptional() const;
  int exceptional_index(const lat::Ivec& e) const;
  perm::Permutation exceptional_permutation(const WeylElement& w) const;

  // degree 2: the 28 Geiser pairs {i, j} with i < j, sorted
  const std::vector<std::pair<int, int>>& pairs() const;
  perm::Permutation pair_permutation(const WeylElement& w) const;

  // degree <= 6
  const lat::Mod2Quotient& quotient() const;
  sym::Symplectomorphism mod2_symplectic(const WeylElement& w) const;

  // degree 2: the odd quadratic form attached to the Geiser pair of e,
  // x -> x^2/2 + x.e on the quotient; indexed like pairs()
  std::vector<sym::QuadraticForm> pair_forms() const;

  // lexicographically least 7-tuple of pairwise orthogonal roots (degree 2)
  Frame orthogonal_frame() const;
  std::vector<WeylElement> frame_reflections() const;
  std::vector<perm::Permutation> frame_pair_action() const;

  WeylElement random_element(std::mt19937_64& rng, int words = 40) const;

 private:
  lat::PicardLattice lattice_;
  std::vector<lat::Ivec> roots_;
  std::map<lat::Ivec, int> root_index_;
  std::vector<WeylElement> simple_refl_;
  std::vector<lat::Ivec> exc_;
  std::map<lat::Ivec, int> exc_index_;
  std::vector<std::pair<int, int>> pairs_;
  mutable std::optional<lat::Mod2Quotient> quotient_;
  mutable std::optional<perm::PermGroup> root_group_;
  mutable std::optional<Frame> frame_;
};

}  // namespace e7kit::weyl
