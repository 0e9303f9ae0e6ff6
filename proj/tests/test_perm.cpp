#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "e7kit/perm.hpp"

using e7kit::perm::PermGroup;
using e7kit::perm::Permutation;

namespace {

// Oracle: closure of the generator set under composition, by plain BFS
// over image arrays. Only usable for small groups.
std::set<std::vector<int>> brute_closure(const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> queue;
  Permutation id(gens.at(0).degree());
  seen.insert(id.images());
  queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Permutation cur = queue[head];
    for (const auto& g : gens) {
      Permutation nxt = g * cur;
      if (seen.insert(nxt.images()).second) queue.push_back(nxt);
    }
  }
  return seen;
}

Permutation cycle(int n, const std::vector<int>& pts) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(img);
}

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

TEST_CASE("permutation composition and inverse") {
  Permutation p(std::vector<int>{1, 2, 0});
  Permutation q = Permutation::transposition(3, 0, 1);
  CHECK((p * q).images() == std::vector<int>{2, 1, 0});
  CHECK((q * p).images() == std::vector<int>{0, 2, 1});
  CHECK(p.inverse().images() == std::vector<int>{2, 0, 1});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation a = random_perm(9, rng);
    Permutation b = random_perm(9, rng);
    CHECK((a * a.inverse()).is_identity());
    CHECK(((a * b).inverse() == b.inverse() * a.inverse()));
    for (int i = 0; i < 9; ++i) CHECK((a * b)(i) == a(b(i)));
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(4, 0, 5), std::invalid_argument);
}

TEST_CASE("cycle type") {
  CHECK(Permutation(5).cycle_type() == std::map<int, int>{{1, 5}});
  CHECK(Permutation::transposition(5, 1, 3).cycle_type() == std::map<int, int>{{1, 3}, {2, 1}});
  CHECK(Permutation::transposition(5, 1, 3).cycle_type_string() == "1^3 2^1");
  Permutation c = cycle(6, {0, 1, 2}) * cycle(6, {3, 4});
  CHECK(c.cycle_type() == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("group order matches brute closure") {
  struct Case {
    std::vector<Permutation> gens;
    std::uint64_t expect;
  };
  std::vector<Case> cases;

  for (int n = 3; n <= 6; ++n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    cases.push_back({{Permutation::transposition(n, 0, 1), cycle(n, all)}, fact});
  }
  // cyclic C12, dihedral of the 8-gon, Klein four acting regularly
  std::vector<int> twelve(12);
  for (int i = 0; i < 12; ++i) twelve[i] = i;
  cases.push_back({{cycle(12, twelve)}, 12});
  std::vector<int> oct(8);
  for (int i = 0; i < 8; ++i) oct[i] = i;
  std::vector<int> refl(8);
  for (int i = 0; i < 8; ++i) refl[i] = (8 - i) % 8;
  cases.push_back({{cycle(8, oct), Permutation(refl)}, 16});
  cases.push_back({{Permutation(std::vector<int>{1, 0, 3, 2}), Permutation(std::vector<int>{2, 3, 0, 1})}, 4});
  // alternating A4 from two 3-cycles
  cases.push_back({{cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, 12});

  for (const auto& c : cases) {
    auto closure = brute_closure(c.gens);
    PermGroup grp(c.gens);
    CHECK(closure.size() == c.expect);
    CHECK(grp.order() == c.expect);
    for (const auto& img : closure) CHECK(grp.contains(Permutation(img)));
  }
}

TEST_CASE("membership rejects outsiders") {
  // A4 inside S4: the 12 odd permutations must be rejected.
  PermGroup a4({cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(a4.order() == 12);
  int rejected = 0;
  std::vector<int> img{0, 1, 2, 3};
  do {
    if (!a4.contains(Permutation(img))) ++rejected;
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK(rejected == 12);

  PermGroup klein({Permutation(std::vector<int>{1, 0, 3, 2}), Permutation(std::vector<int>{2, 3, 0, 1})});
  CHECK_FALSE(klein.contains(Permutation::transposition(4, 0, 1)));
  CHECK(klein.contains(Permutation(std::vector<int>{3, 2, 1, 0})));
}

TEST_CASE("larger symmetric group order") {
  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[i] = i;
  PermGroup s8({Permutation::transposition(8, 0, 1), cycle(8, all)});
  CHECK(s8.order() == 40320);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) CHECK(s8.contains(random_perm(8, rng)));
}

TEST_CASE("trivial and identity-only groups") {
  PermGroup triv({Permutation(5)});
  CHECK(triv.order() == 1);
  CHECK(triv.contains(Permutation(5)));
  CHECK_FALSE(triv.contains(Permutation::transposition(5, 0, 1)));
}
