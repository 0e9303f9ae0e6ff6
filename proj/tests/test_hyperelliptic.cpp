#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "e7kit/abelian2.hpp"
#include "e7kit/errors.hpp"
#include "e7kit/hyperelliptic.hpp"

using namespace e7kit;
using hyp::HyperellipticModel;
using perm::Permutation;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation(img);
}

}  // namespace

TEST_CASE("pair classes carry the intersection pairing") {
  for (int g = 1; g <= 3; ++g) {
    HyperellipticModel m(g);
    auto sp = m.space();
    int n = m.marked_points();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            int common = (a == c) + (a == d) + (b == c) + (b == d);
            CHECK(sp.pairing(m.pair_class(a, b), m.pair_class(c, d)) == (common % 2 != 0));
          }
    // complement classes coincide: {a,b} and its complement are equal in V
    if (g == 1) CHECK(m.pair_class(0, 1) == m.pair_class(2, 3));
  }
}

TEST_CASE("pair classes span and are nonzero") {
  for (int g = 1; g <= 3; ++g) {
    HyperellipticModel m(g);
    std::vector<f2::Vec> all;
    for (int a = 0; a < m.marked_points(); ++a)
      for (int b = a + 1; b < m.marked_points(); ++b) {
        CHECK_FALSE(m.pair_class(a, b).is_zero());
        all.push_back(m.pair_class(a, b));
      }
    CHECK(f2::span_rank(all) == 2 * g);
  }
}

TEST_CASE("marked point permutations act symplectically") {
  std::mt19937_64 rng(19);
  for (int g = 1; g <= 3; ++g) {
    HyperellipticModel m(g);
    CHECK(m.to_symplectic(Permutation(m.marked_points())).matrix() == f2::Mat::identity(2 * g));
    for (int trial = 0; trial < 25; ++trial) {
      Permutation s = random_perm(m.marked_points(), rng);
      Permutation t = random_perm(m.marked_points(), rng);
      CHECK(m.to_symplectic(s * t).matrix() == (m.to_symplectic(s) * m.to_symplectic(t)).matrix());
    }
    // the action transports pair classes as subsets
    for (int trial = 0; trial < 10; ++trial) {
      Permutation s = random_perm(m.marked_points(), rng);
      auto sigma = m.to_symplectic(s);
      for (int a = 0; a < m.marked_points(); ++a)
        for (int b = a + 1; b < m.marked_points(); ++b) {
          int ia = std::min(s(a), s(b)), ib = std::max(s(a), s(b));
          CHECK(sigma.apply(m.pair_class(a, b)) == m.pair_class(ia, ib));
        }
    }
  }
}

TEST_CASE("image sizes of the marked point actions") {
  CHECK(HyperellipticModel(1).image_size() == 6);      // kernel of order 4 inside the 24
  CHECK(HyperellipticModel(2).image_size() == 720);    // bijective onto the genus 2 group
  CHECK(HyperellipticModel(3).image_size() == 40320);  // injective into the genus 3 group
  CHECK(HyperellipticModel(1).image_size() == sym::sp_order(1));
  CHECK(HyperellipticModel(2).image_size() == sym::sp_order(2));
  CHECK_THROWS_AS(HyperellipticModel(4).image_size(), budget_error);
  CHECK_THROWS_AS(HyperellipticModel(5), std::invalid_argument);
}

TEST_CASE("disjoint transpositions act as commuting involutions on odd forms") {
  for (int g = 1; g <= 3; ++g) {
    HyperellipticModel m(g);
    auto odd = m.odd_forms();
    CHECK(odd.size() == (std::size_t{1} << (2 * g - 1)) - (std::size_t{1} << (g - 1)));
    auto gens = m.disjoint_transpositions();
    CHECK(gens.size() == static_cast<std::size_t>(g + 1));
    auto action = m.odd_form_action();
    auto report = ab2::analyze_action(action);
    std::size_t total = 0;
    for (const auto& o : report.orbits) total += o.members.size();
    CHECK(total == odd.size());
    for (int i = 0; i < report.num_generators; ++i)
      CHECK(ab2::reconstruct_generator(report, i) == action[i]);
  }
}

TEST_CASE("genus 3 orbit structure on the 28 odd forms") {
  HyperellipticModel m(3);
  auto report = ab2::analyze_action(m.odd_form_action());
  REQUIRE(report.orbits.size() == 10);
  int fixed = 0, klein = 0;
  for (const auto& o : report.orbits) {
    if (o.members.size() == 1) {
      ++fixed;
      CHECK(o.quotient_rank == 0);
    } else {
      ++klein;
      CHECK(o.members.size() == 4);
      CHECK(o.quotient_rank == 2);
      CHECK(o.characters.size() == 3);
    }
  }
  CHECK(fixed == 4);
  CHECK(klein == 6);
  CHECK(report.flattened.rows() == 18);
  CHECK(report.flattened.cols() == 4);
}

TEST_CASE("genus 2 orbit structure on the six odd forms") {
  HyperellipticModel m(2);
  auto report = ab2::analyze_action(m.odd_form_action());
  REQUIRE(report.orbits.size() == 3);
  for (const auto& o : report.orbits) {
    CHECK(o.members.size() == 2);
    CHECK(o.quotient_rank == 1);
    CHECK(o.characters.size() == 1);
  }
  CHECK(report.flattened.rows() == 3);
  CHECK(report.flattened.cols() == 3);
  // three independent characters: the quotient separates the orbits
  std::vector<f2::Vec> rows;
  for (int r = 0; r < 3; ++r) rows.push_back(report.flattened.row(r));
  CHECK(f2::span_rank(rows) == 3);
}
