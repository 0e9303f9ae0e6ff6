#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "e7kit/lattice.hpp"

namespace e7kit::torus {

// Prime field arithmetic for odd primes p > 3 with p = 2 mod 3, so that
// cubing is a bijection and cube roots are exact powers.
class Fp {
 public:
  explicit Fp(std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t reduce(std::int64_t a) const { return ((a % p_) + p_) % p_; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;  // e may be negative
  std::int64_t inv(std::int64_t a) const;
  std::int64_t cbrt(std::int64_t a) const;

 private:
  std::int64_t p_;
  std::int64_t cbrt_exp_;
};

// determinant over F_p by Gaussian elimination, for certificates that no
// fraction-free integer method could carry without overflow
std::int64_t det_mod(const Fp& f, std::vector<std::vector<std::int64_t>> m);

// Point of T(F_p) for the torus dual to the degree-2 root lattice, stored
// as its values on the simple roots in simple_roots() order.
class Character {
 public:
  Character(const lat::PicardLattice& lattice, const Fp& field,
            std::vector<std::int64_t> simple_values);

  // consumes exactly simple_roots().size() draws of 1 + rng() % (p-1)
  static Character random(const lat::PicardLattice& lattice, const Fp& field,
                          std::mt19937_64& rng);

  const lat::PicardLattice& lattice() const { return lattice_; }
  const Fp& field() const { return field_; }
  const std::vector<std::int64_t>& simple_values() const { return values_; }

  std::int64_t operator()(const lat::Ivec& root) const;

  // returns the copy with one simple value adjusted so that the target
  // root evaluates to 1; uses the first simple-root coefficient of
  // absolute value 1
  Character conditioned(const lat::Ivec& target_root) const;

 private:
  lat::PicardLattice lattice_;
  Fp field_;
  std::vector<std::int64_t> values_;
};

// the 63 lexicographically positive roots, sorted
std::vector<lat::Ivec> positive_roots(const lat::PicardLattice& lattice);

// first positive root on which chi is 1, in sorted order
std::optional<lat::Ivec> divisor_witness(const Character& chi);
bool in_divisor(const Character& chi);

// ---- the nodal cubic y^2 z = x^2 (x + z) and its G_m parametrization ----

struct Point {
  std::int64_t x = 0, y = 0, z = 0;
  bool operator==(const Point& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// normalized so the last nonzero coordinate is 1
Point normalize(const Fp& f, Point p);

// P(t) = [4t(1-t) : 4t(1+t) : (1-t)^3], smooth-locus point for t != 0
Point cubic_point(const Fp& f, std::int64_t t);
bool on_cubic(const Fp& f, const Point& p);

bool collinear(const Fp& f, const Point& a, const Point& b, const Point& c);
// conic through all six, possibly degenerate; Veronese monomial order
// x^2, y^2, z^2, xy, xz, yz
bool on_conic(const Fp& f, const std::array<Point, 6>& pts);

struct Configuration {
  std::vector<std::int64_t> t;  // torus parameters, one per point
  std::vector<Point> points;
};

// Failed checks of a seven-point configuration, all index lists sorted,
// 0-based point indices.
struct PositionReport {
  std::vector<std::array<int, 2>> coincident;
  std::vector<std::array<int, 3>> collinear_triples;
  std::vector<std::array<int, 6>> conic_sextuples;

  bool ok() const {
    return coincident.empty() && collinear_triples.empty() && conic_sextuples.empty();
  }
  bool operator==(const PositionReport& o) const {
    return coincident == o.coincident && collinear_triples == o.collinear_triples &&
           conic_sextuples == o.conic_sextuples;
  }
};

PositionReport general_position(const Fp& f, const Configuration& c);

// the t_i solving chi = (H -> 1, E_i -> t_i) on the root lattice
std::vector<std::int64_t> torus_parameters(const Character& chi);

// throws invalid_argument when chi lies on the root divisor
Configuration points_from_torus(const Character& chi);
// no divisor check, for equivalence experiments
Configuration points_from_torus_unchecked(const Character& chi);

// checks that failing exactly the target root predicts
PositionReport predicted_violations(const lat::PicardLattice& lattice,
                                    const lat::Ivec& root);

struct EquivalenceStats {
  int trials = 0;
  int divisor_hits = 0;
  int agreements = 0;  // in_divisor == !general_position.ok()
};

EquivalenceStats equivalence_experiment(const lat::PicardLattice& lattice, const Fp& field,
                                        std::uint64_t seed, int trials);

struct ConditionedTrial {
  lat::Ivec root;
  std::string type;
  PositionReport predicted;
  PositionReport actual;
  bool match = false;
  int resamples = 0;
};

// samples characters until the divisor locus is hit exactly at target_root,
// then compares the failed checks with the predicted set
ConditionedTrial conditioned_trial(const lat::PicardLattice& lattice, const Fp& field,
                                   std::uint64_t seed, const lat::Ivec& target_root,
                                   int max_resamples = 1000);

}  // namespace e7kit::torus
