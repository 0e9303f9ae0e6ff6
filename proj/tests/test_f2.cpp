#include <doctest.h>

#include <random>

#include "e7kit/f2.hpp"

using namespace e7kit;

TEST_CASE("vec basics") {
  f2::Vec v(6, 0);
  v.set(0, true).set(2, true).set(3, true);
  CHECK(v.weight() == 3);
  CHECK(v.get(0));
  CHECK(!v.get(1));
  f2::Vec w = v + f2::Vec::unit(6, 0);
  CHECK(w.weight() == 2);
  CHECK(v.dot(f2::Vec(6, 0b001101)));
  CHECK_THROWS_AS(v + f2::Vec::zero(5), std::invalid_argument);
  CHECK_THROWS_AS(f2::Vec(6, 0).get(6), std::out_of_range);
}

TEST_CASE("vec hex round trip") {
  // Coordinates (1,0,1,1,0,0) pack to digits 1011 0000 = "b0".
  f2::Vec v(6, 0);
  v.set(0, true).set(2, true).set(3, true);
  CHECK(v.hex() == "b0");
  CHECK(f2::Vec::from_hex(6, "b0") == v);
  CHECK_THROWS_AS(f2::Vec::from_hex(6, "b1"), std::invalid_argument);  // padding bit set
  CHECK_THROWS_AS(f2::Vec::from_hex(6, "b"), std::invalid_argument);

  std::mt19937_64 rng(1);
  for (int len = 1; len <= 20; ++len)
    for (int t = 0; t < 50; ++t) {
      f2::Vec u(len, rng() & ((uint64_t{1} << len) - 1));
      CHECK(f2::Vec::from_hex(len, u.hex()) == u);
    }
}

TEST_CASE("mat multiply and apply agree with direct sums") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + int(rng() % 8), m = 1 + int(rng() % 8), k = 1 + int(rng() % 8);
    f2::Mat a(n, m), b(m, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) a.set(i, j, rng() & 1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) b.set(i, j, rng() & 1);
    f2::Mat c = a * b;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) {
        bool s = false;
        for (int l = 0; l < m; ++l) s ^= (a.get(i, l) && b.get(l, j));
        CHECK(c.get(i, j) == s);
      }
    f2::Vec v(m, rng() & ((uint64_t{1} << m) - 1));
    f2::Vec av = a.apply(v);
    for (int i = 0; i < n; ++i) CHECK(av.get(i) == a.row(i).dot(v));
  }
}

TEST_CASE("rank, kernel, inverse, solve") {
  std::mt19937_64 rng(3);
  int singular_seen = 0, invertible_seen = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 1 + int(rng() % 9);
    f2::Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.set(i, j, rng() & 1);

    int r = a.rank();
    auto ker = a.kernel_basis();
    CHECK(r + (int)ker.size() == n);
    for (const auto& v : ker) CHECK(a.apply(v).is_zero());
    CHECK(f2::span_rank(ker) == (int)ker.size());

    if (r == n) {
      ++invertible_seen;
      f2::Mat inv = a.inverse();
      CHECK(a * inv == f2::Mat::identity(n));
      CHECK(inv * a == f2::Mat::identity(n));
    } else {
      ++singular_seen;
      CHECK_THROWS_AS(a.inverse(), std::domain_error);
    }

    f2::Vec x(n, rng() & ((uint64_t{1} << n) - 1));
    f2::Vec b = a.apply(x);
    f2::Vec sol;
    CHECK(f2::Mat::solve(a, b, sol));
    CHECK(a.apply(sol) == b);
  }
  CHECK(singular_seen > 10);
  CHECK(invertible_seen > 10);
}

TEST_CASE("transpose and pack") {
  f2::Mat a(2, 3);
  a.set(0, 1, true);
  a.set(1, 2, true);
  f2::Mat at = a.transposed();
  CHECK(at.rows() == 3);
  CHECK(at.get(1, 0));
  CHECK(at.get(2, 1));
  CHECK(a.pack() == ((0b010) | (0b100 << 3)));
}

TEST_CASE("symplectic split of alternating grams") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + int(rng() % 9);
    f2::Mat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool b = rng() & 1;
        g.set(i, j, b);
        g.set(j, i, b);
      }
    auto split = f2::symplectic_split(g);
    auto pairing = [&](const f2::Vec& a, const f2::Vec& b) { return g.apply(b).dot(a); };
    int p = (int)split.e.size();
    REQUIRE((int)split.f.size() == p);
    CHECK(2 * p + (int)split.radical.size() == n);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        CHECK(pairing(split.e[i], split.f[j]) == (i == j));
        CHECK(!pairing(split.e[i], split.e[j]));
        CHECK(!pairing(split.f[i], split.f[j]));
      }
    for (const auto& r : split.radical) {
      for (int i = 0; i < n; ++i) CHECK(!pairing(r, f2::Vec::unit(n, i)));
    }
    std::vector<f2::Vec> all = split.e;
    all.insert(all.end(), split.f.begin(), split.f.end());
    all.insert(all.end(), split.radical.begin(), split.radical.end());
    CHECK(f2::span_rank(all) == n);
    CHECK(2 * p == g.rank());
  }
}
