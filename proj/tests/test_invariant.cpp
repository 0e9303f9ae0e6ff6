#include <random>

#include "doctest.h"
#include "e7kit/hyperelliptic.hpp"
#include "e7kit/invariant.hpp"
#include "e7kit/weyl.hpp"

using namespace e7kit;
using inv::SquareFreePoly;

namespace {

SquareFreePoly random_poly(std::mt19937_64& rng, int nvars, int nterms) {
  std::vector<std::uint32_t> terms;
  for (int i = 0; i < nterms; ++i)
    terms.push_back((std::uint32_t)(rng() & ((1u << nvars) - 1)));
  return SquareFreePoly::from_terms(nvars, terms);
}

f2::Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
  f2::Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, (rng() & 1) != 0);
  return m;
}

}  // namespace

TEST_CASE("ring arithmetic in the square-free quotient") {
  auto x = SquareFreePoly::variable(3, 0);
  auto y = SquareFreePoly::variable(3, 1);
  auto one = SquareFreePoly::one(3);

  CHECK((x * x).is_zero());
  CHECK(x + x == SquareFreePoly::zero(3));
  CHECK(x * y == y * x);
  CHECK((one + x) * (one + x) == one);  // 1 + 2x + x^2
  CHECK((one + x) * (one + y) == SquareFreePoly::from_terms(3, {0b000, 0b001, 0b010, 0b011}));
  CHECK(x.degree() == 1);
  CHECK((x * y).degree() == 2);
  CHECK(SquareFreePoly::zero(3).degree() == -1);
  CHECK(one.str() == "1");
  CHECK((one + x * y).str() == "1 + a0*a1");

  CHECK_THROWS_AS(SquareFreePoly::variable(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(SquareFreePoly::from_terms(2, {0b100}), std::invalid_argument);
  CHECK_THROWS_AS(SquareFreePoly(32), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto a = random_poly(rng, 6, 8), b = random_poly(rng, 6, 8), c = random_poly(rng, 6, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    // truncation is a ring quotient
    CHECK((a * b).truncated(3) == inv::mul_capped(a.truncated(3), b.truncated(3), 3));
  }
}

TEST_CASE("two routes to the elementary symmetric polynomials") {
  for (int n : {1, 2, 3, 5, 8}) {
    std::vector<SquareFreePoly> vars;
    for (int i = 0; i < n; ++i) vars.push_back(SquareFreePoly::variable(n, i));

    auto total = SquareFreePoly::one(n);
    for (const auto& v : vars) total = total * (SquareFreePoly::one(n) + v);

    auto sum = SquareFreePoly(n);
    for (int d = 0; d <= n; ++d) {
      auto sd = inv::sigma(n, d);
      CHECK(sd == inv::elementary_symmetric(n, vars, d));
      CHECK(sd == total.piece(d));
      long long binom = 1;
      for (int i = 0; i < d; ++i) binom = binom * (n - i) / (i + 1);
      CHECK((long long)sd.terms().size() == binom);
      sum = sum + sd;
    }
    CHECK(sum == total);
  }
  CHECK(inv::sigma(5, 6).is_zero());
  CHECK(inv::sigma(5, 5) == SquareFreePoly::from_terms(5, {0b11111}));
}

TEST_CASE("pullback substitutes rows and is contravariantly functorial") {
  // swap of two variables
  f2::Mat swp(2, 2);
  swp.set(0, 1, true);
  swp.set(1, 0, true);
  auto x = SquareFreePoly::variable(2, 0);
  CHECK(inv::pullback(swp, x) == SquareFreePoly::variable(2, 1));

  // x -> y0 + y1 kills the square
  f2::Mat m(1, 2);
  m.set(0, 0, true);
  m.set(0, 1, true);
  auto v = SquareFreePoly::variable(1, 0);
  CHECK(inv::pullback(m, v) ==
        SquareFreePoly::variable(2, 0) + SquareFreePoly::variable(2, 1));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto p = random_poly(rng, 5, 6);
    auto a = random_mat(rng, 5, 4);
    auto b = random_mat(rng, 4, 6);
    CHECK(inv::pullback(b, inv::pullback(a, p)) == inv::pullback(a * b, p));
  }

  CHECK_THROWS_AS(inv::pullback(f2::Mat(3, 2), SquareFreePoly::one(2)),
                  std::invalid_argument);
}

TEST_CASE("total class of a regular Klein orbit is 1 + a*b") {
  auto a = perm::Permutation({1, 0, 3, 2});
  auto b = perm::Permutation({2, 3, 0, 1});
  auto report = ab2::analyze_action({a, b});
  auto sw = inv::sw_total_of_perm_rep(report);
  CHECK(sw == SquareFreePoly::from_terms(2, {0b00, 0b11}));
  CHECK(inv::sw_piece(report, 1).is_zero());
  CHECK(inv::sw_piece(report, 2) == SquareFreePoly::from_terms(2, {0b11}));

  // restriction to the first generator: two 2-orbits, class (1+s)^2 = 1;
  // the same answer comes from pulling back along the inclusion
  auto sub = ab2::analyze_action({a});
  auto sw_sub = inv::sw_total_of_perm_rep(sub);
  CHECK(sw_sub == SquareFreePoly::one(1));
  f2::Mat incl(2, 1);
  incl.set(0, 0, true);
  CHECK(inv::pullback(incl, sw) == sw_sub);
}

TEST_CASE("reports with orbits of size at most 2 reduce to sigma of the rows") {
  for (int g : {1, 2}) {
    hyp::HyperellipticModel model(g);
    auto report = ab2::analyze_action(model.odd_form_action());
    auto env = ab2::envelope(report);
    if (g == 1) {
      CHECK(env.kind == "trivial");
      CHECK(env.rank == 0);
    } else {
      CHECK(env.kind == "transposition");
      CHECK(env.rank == 3);
    }
    std::vector<SquareFreePoly> rows;
    for (int i = 0; i < report.flattened.rows(); ++i)
      rows.push_back(SquareFreePoly::linear(report.flattened.row(i)));
    for (int d = 0; d <= report.num_generators; ++d)
      CHECK(inv::sw_piece(report, d) == inv::elementary_symmetric(report.num_generators, rows, d));
  }

  // genus 2 rows are the three coordinate forms, so the pieces are the
  // plain elementary symmetric polynomials
  hyp::HyperellipticModel model(2);
  auto report = ab2::analyze_action(model.odd_form_action());
  for (int d = 0; d <= 3; ++d) CHECK(inv::sw_piece(report, d) == inv::sigma(3, d));
}

TEST_CASE("frame report: degree-1 piece vanishes, envelope is regular Klein of rank 14") {
  weyl::WeylGroup W{lat::PicardLattice(2)};
  auto report = ab2::analyze_action(W.frame_pair_action());

  auto env = ab2::envelope(report);
  CHECK(env.kind == "regular-klein");
  CHECK(env.rank == 14);

  CHECK(inv::sw_piece(report, 0) == SquareFreePoly::one(7));
  CHECK(inv::sw_piece(report, 1).is_zero());
  CHECK(!inv::sw_piece(report, 2).is_zero());

  // cross-check low pieces against the subset-sum route over the 21 rows
  std::vector<SquareFreePoly> rows;
  for (int i = 0; i < report.flattened.rows(); ++i)
    rows.push_back(SquareFreePoly::linear(report.flattened.row(i)));
  REQUIRE(rows.size() == 21);
  for (int d = 0; d <= 4; ++d)
    CHECK(inv::sw_piece(report, d) == inv::elementary_symmetric(report.num_generators, rows, d));

  // hyperelliptic genus 3 gives the mixed-size counterpart
  hyp::HyperellipticModel model(3);
  auto henv = ab2::envelope(ab2::analyze_action(model.odd_form_action()));
  CHECK(henv.kind == "regular-klein");
  CHECK(henv.rank == 12);
}

TEST_CASE("module tables") {
  const auto& sp6 = inv::sp6_module_table();
  CHECK(sp6.degrees == std::vector<int>{0, 2, 3, 4, 6});
  CHECK(sp6.labels.size() == 5);
  CHECK(sp6.labels[0] == "1");
  CHECK(!sp6.note.empty());

  const auto& we7 = inv::we7_module_table();
  CHECK(we7.degrees == std::vector<int>{0, 1, 2, 3, 3, 4, 4, 5, 6, 7});
  CHECK(we7.labels.size() == 10);
  // every degree-d label is consistent with the doubling by the order-2
  // direct factor: the table is two shifted copies of the rank-5 one
  std::vector<int> plus0(sp6.degrees), plus1;
  for (int d : sp6.degrees) plus1.push_back(d + 1);
  std::vector<int> merged(plus0);
  merged.insert(merged.end(), plus1.begin(), plus1.end());
  std::sort(merged.begin(), merged.end());
  CHECK(we7.degrees == merged);
}
