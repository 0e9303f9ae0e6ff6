#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace e7kit::perm {

// Permutation of {0, ..., n-1}, stored as the image array: p(i) = img[i].
// Composition is function composition: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  explicit Permutation(int n);                    // identity
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  // cycle length -> number of cycles of that length, fixed points included
  std::map<int, int> cycle_type() const;
  std::string cycle_type_string() const;  // e.g. "1^16 2^6"

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// Permutation group given by generators; order and membership via a
// Schreier-Sims stabilizer chain. Deterministic for a fixed generator list.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> gens);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int beta = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // BFS discovery order, orbit[0] == beta
    std::unordered_map<int, Permutation> transversal;  // gamma -> u, u(beta) = gamma
  };

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> chain_;

  void build();
  void recompute_orbit(std::size_t level);
  // Sift p through levels [from, end); returns the residue and the level
  // at which sifting stopped (chain_.size() if it went all the way down).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from) const;
  int min_moved_point(const Permutation& p) const;
};

}  // namespace e7kit::perm
