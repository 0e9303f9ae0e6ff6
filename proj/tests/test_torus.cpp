#include <random>
#include <set>

#include "doctest.h"
#include "e7kit/errors.hpp"
#include "e7kit/torus.hpp"

using namespace e7kit;
using torus::Character;
using torus::Fp;
using torus::Point;

namespace {

// independent determinant oracle: cofactor expansion along the first row
std::int64_t det_cofactor_mod(const Fp& f, const std::vector<std::vector<std::int64_t>>& m) {
  std::size_t n = m.size();
  if (n == 1) return f.reduce(m[0][0]);
  std::int64_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    std::int64_t term = f.mul(m[0][c], det_cofactor_mod(f, minor));
    acc = c % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

const lat::PicardLattice& dp2() {
  static lat::PicardLattice L(2);
  return L;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
  CHECK_THROWS_AS(Fp(3), std::invalid_argument);
  CHECK_THROWS_AS(Fp(9), std::invalid_argument);   // composite
  CHECK_THROWS_AS(Fp(7), std::invalid_argument);   // 1 mod 3: cubing not bijective
  CHECK_THROWS_AS(Fp(13), std::invalid_argument);  // 1 mod 3
  Fp f(11);
  Fp big(101);

  for (std::int64_t a = 1; a < 11; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, -1) == f.inv(a));
    CHECK(f.cbrt(f.mul(a, f.mul(a, a))) == a);
    std::int64_t r = f.cbrt(a);
    CHECK(f.mul(r, f.mul(r, r)) == a);
  }
  CHECK(f.cbrt(0) == 0);
  CHECK(f.reduce(-1) == 10);
  CHECK(f.pow(2, 10) == 1);  // Fermat
  CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
  CHECK(big.pow(5, 100) == 1);
}

TEST_CASE("modular determinant against cofactor expansion") {
  Fp f(101);
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
      for (auto& row : m)
        for (auto& v : row) v = (std::int64_t)(rng() % 101);
      CHECK(torus::det_mod(f, m) == det_cofactor_mod(f, m));
    }
  }
  // duplicate rows
  CHECK(torus::det_mod(f, {{1, 2}, {1, 2}}) == 0);
  CHECK_THROWS_AS(torus::det_mod(f, {{1, 2, 3}, {4, 5, 6}}), std::invalid_argument);
}

TEST_CASE("positive roots split the root system into 63 opposite pairs") {
  auto pos = torus::positive_roots(dp2());
  REQUIRE(pos.size() == 63);
  CHECK(std::is_sorted(pos.begin(), pos.end()));
  auto every = dp2().roots();
  std::set<lat::Ivec> all(every.begin(), every.end());
  std::set<lat::Ivec> rebuilt;
  for (const auto& r : pos) {
    for (auto v : r) {
      if (v != 0) {
        CHECK(v > 0);
        break;
      }
    }
    rebuilt.insert(r);
    rebuilt.insert(lat::neg(r));
  }
  CHECK(rebuilt == all);
}

TEST_CASE("characters evaluate multiplicatively on the root lattice") {
  Fp f(101);
  std::mt19937_64 rng(17);
  auto chi = Character::random(dp2(), f, rng);

  auto simple = dp2().simple_roots();
  for (std::size_t j = 0; j < simple.size(); ++j)
    CHECK(chi(simple[j]) == chi.simple_values()[j]);
  for (const auto& r : dp2().roots()) {
    CHECK(chi(r) != 0);
    CHECK(f.mul(chi(r), chi(lat::neg(r))) == 1);
  }
  lat::Ivec e12{0, 1, -1, 0, 0, 0, 0, 0}, e23{0, 0, 1, -1, 0, 0, 0, 0},
      e13{0, 1, 0, -1, 0, 0, 0, 0};
  CHECK(chi(e13) == f.mul(chi(e12), chi(e23)));

  CHECK_THROWS_AS(Character(dp2(), f, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Character(dp2(), f, {0, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("conditioning lands every positive root on the divisor") {
  Fp f(101);
  std::mt19937_64 rng(23);
  auto chi = Character::random(dp2(), f, rng);
  for (const auto& r : torus::positive_roots(dp2())) {
    auto forced = chi.conditioned(r);
    CHECK(forced(r) == 1);
  }
}

TEST_CASE("nodal cubic parametrization, exhaustive over F11") {
  Fp f(11);
  Point node = torus::normalize(f, {0, 0, 1});
  Point identity{0, 1, 0};
  CHECK(torus::on_cubic(f, node));
  CHECK(torus::cubic_point(f, 1) == identity);
  CHECK_THROWS_AS(torus::cubic_point(f, 0), std::invalid_argument);

  std::vector<Point> pts;
  for (std::int64_t t = 1; t <= 10; ++t) {
    auto p = torus::cubic_point(f, t);
    CHECK(torus::on_cubic(f, p));
    CHECK(p != node);
    for (const auto& q : pts) CHECK(p != q);
    pts.push_back(p);
  }

  // group law against the 3x3 determinant, all distinct triples
  for (std::int64_t a = 1; a <= 10; ++a)
    for (std::int64_t b = a + 1; b <= 10; ++b)
      for (std::int64_t c = b + 1; c <= 10; ++c) {
        bool det_zero = torus::collinear(f, pts[a - 1], pts[b - 1], pts[c - 1]);
        bool prod_one = f.mul(a, f.mul(b, c)) == 1;
        CHECK(det_zero == prod_one);
      }

  // conic sections against the 6x6 Veronese determinant, all 210 6-subsets
  int subsets = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    ++subsets;
    std::array<Point, 6> six;
    std::int64_t prod = 1;
    int w = 0;
    for (std::int64_t t = 1; t <= 10; ++t) {
      if (!(mask >> (t - 1) & 1)) continue;
      six[w++] = pts[t - 1];
      prod = f.mul(prod, t);
    }
    CHECK(torus::on_conic(f, six) == (prod == 1));
  }
  CHECK(subsets == 210);
}

TEST_CASE("group law against determinants, randomized over F101") {
  Fp f(101);
  std::mt19937_64 rng(29);
  auto draw = [&] { return 1 + (std::int64_t)(rng() % 100); };
  for (int trial = 0; trial < 100; ++trial) {
    std::int64_t a = draw(), b = draw(), c = draw();
    if (a == b || a == c || b == c) continue;
    bool det_zero = torus::collinear(f, torus::cubic_point(f, a), torus::cubic_point(f, b),
                                     torus::cubic_point(f, c));
    CHECK(det_zero == (f.mul(a, f.mul(b, c)) == 1));
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::int64_t> ts;
    while (ts.size() < 6) ts.insert(draw());
    std::array<Point, 6> six;
    std::int64_t prod = 1;
    int w = 0;
    for (auto t : ts) {
      six[w++] = torus::cubic_point(f, t);
      prod = f.mul(prod, t);
    }
    CHECK(torus::on_conic(f, six) == (prod == 1));
  }
}

TEST_CASE("torus parameters solve the character identity with H -> 1") {
  Fp f(101);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto chi = Character::random(dp2(), f, rng);
    auto t = torus::torus_parameters(chi);
    REQUIRE(t.size() == 7);
    for (auto v : t) CHECK(v != 0);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        if (i == j) continue;
        auto root = lat::sub(dp2().E(i), dp2().E(j));
        CHECK(chi(root) == f.mul(t[i - 1], f.inv(t[j - 1])));
      }
    for (auto [a, b, c] : {std::array<int, 3>{1, 2, 3}, {2, 5, 7}, {3, 4, 6}}) {
      auto root = lat::sub(dp2().H(), lat::add(dp2().E(a), lat::add(dp2().E(b), dp2().E(c))));
      CHECK(chi(root) == f.inv(f.mul(t[a - 1], f.mul(t[b - 1], t[c - 1]))));
    }
    for (int omit = 1; omit <= 7; ++omit) {
      auto root = lat::scale(2, dp2().H());
      std::int64_t prod = 1;
      for (int k = 1; k <= 7; ++k) {
        if (k == omit) continue;
        root = lat::sub(root, dp2().E(k));
        prod = f.mul(prod, t[k - 1]);
      }
      CHECK(chi(root) == f.inv(prod));
    }
  }
}

TEST_CASE("public construction refuses divisor characters") {
  Fp f(101);
  std::mt19937_64 rng(37);
  auto chi = Character::random(dp2(), f, rng);
  auto forced = chi.conditioned(lat::Ivec{0, 1, -1, 0, 0, 0, 0, 0});
  CHECK(torus::in_divisor(forced));
  CHECK_THROWS_AS(torus::points_from_torus(forced), std::invalid_argument);

  // search for a divisor-free sample, then the full certificate must pass
  for (int i = 0; i < 100; ++i) {
    auto cand = Character::random(dp2(), f, rng);
    if (torus::in_divisor(cand)) continue;
    auto cfg = torus::points_from_torus(cand);
    REQUIRE(cfg.points.size() == 7);
    for (const auto& p : cfg.points) CHECK(torus::on_cubic(f, p));
    CHECK(torus::general_position(f, cfg).ok());
    return;
  }
  FAIL("no divisor-free character found in 100 samples");
}

TEST_CASE("divisor membership is equivalent to failed general position, 200 trials") {
  Fp f(101);
  auto stats = torus::equivalence_experiment(dp2(), f, 20260816ull, 200);
  CHECK(stats.trials == 200);
  CHECK(stats.agreements == 200);
  CHECK(stats.divisor_hits == 99);
}

TEST_CASE("witness-conditioned samples fail exactly the predicted checks") {
  Fp f(101);
  lat::Ivec zij{0, 1, -1, 0, 0, 0, 0, 0};
  lat::Ivec zijk{1, -1, -1, -1, 0, 0, 0, 0};
  lat::Ivec zi{2, -1, -1, -1, -1, -1, -1, 0};

  auto a = torus::conditioned_trial(dp2(), f, 31337ull, zij);
  CHECK(a.type == "ZIJ");
  CHECK(a.match);
  CHECK(a.predicted.coincident == std::vector<std::array<int, 2>>{{0, 1}});
  CHECK(a.predicted.collinear_triples.size() == 5);
  CHECK(a.predicted.conic_sextuples.size() == 5);

  auto b = torus::conditioned_trial(dp2(), f, 31337ull, zijk);
  CHECK(b.type == "ZIJK");
  CHECK(b.match);
  CHECK(b.actual.coincident.empty());
  CHECK(b.actual.collinear_triples == std::vector<std::array<int, 3>>{{0, 1, 2}});
  CHECK(b.actual.conic_sextuples.empty());

  auto c = torus::conditioned_trial(dp2(), f, 31337ull, zi);
  CHECK(c.type == "ZI");
  CHECK(c.match);
  CHECK(c.actual.collinear_triples.empty());
  CHECK(c.actual.conic_sextuples == std::vector<std::array<int, 6>>{{0, 1, 2, 3, 4, 5}});

  // every positive root type has a usable prediction
  for (const auto& r : torus::positive_roots(dp2())) {
    auto pred = torus::predicted_violations(dp2(), r);
    auto tag = dp2().root_type(r).tag;
    if (tag == "ZIJ") {
      CHECK(pred.coincident.size() == 1);
      CHECK(pred.collinear_triples.size() == 5);
      CHECK(pred.conic_sextuples.size() == 5);
    } else if (tag == "ZIJK") {
      CHECK(pred.coincident.empty());
      CHECK(pred.collinear_triples.size() == 1);
      CHECK(pred.conic_sextuples.empty());
    } else {
      CHECK(tag == "ZI");
      CHECK(pred.collinear_triples.empty());
      CHECK(pred.conic_sextuples.size() == 1);
    }
  }
}
