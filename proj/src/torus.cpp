#include "e7kit/torus.hpp"

#include <algorithm>
#include <stdexcept>

#include "e7kit/errors.hpp"

namespace e7kit::torus {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// x with a x = 1 mod m, for gcd(a, m) = 1
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("not invertible");
  return ((s0 % m) + m) % m;
}

}  // namespace

Fp::Fp(std::int64_t p) : p_(p) {
  if (p <= 3) throw std::invalid_argument("p must exceed 3");
  if (p >= (std::int64_t{1} << 31)) throw std::invalid_argument("p too large");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p % 3 != 2) throw std::invalid_argument("p must be 2 mod 3 so cubing is bijective");
  cbrt_exp_ = inv_mod(3, p_ - 1);
}

std::int64_t Fp::mul(std::int64_t a, std::int64_t b) const {
  return (std::int64_t)((__int128)reduce(a) * reduce(b) % p_);
}

std::int64_t Fp::pow(std::int64_t a, std::int64_t e) const {
  a = reduce(a);
  if (e < 0) {
    if (a == 0) throw std::invalid_argument("negative power of zero");
    a = inv(a);
    e = -e;
  }
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t Fp::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, p_ - 2);
}

std::int64_t Fp::cbrt(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) return 0;
  return pow(a, cbrt_exp_);
}

std::int64_t det_mod(const Fp& f, std::vector<std::vector<std::int64_t>> m) {
  std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
    for (auto& v : row) v = f.reduce(v);
  }
  std::int64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    std::int64_t ipiv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      std::int64_t factor = f.mul(m[r][col], ipiv);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return det;
}

Character::Character(const lat::PicardLattice& lattice, const Fp& field,
                     std::vector<std::int64_t> simple_values)
    : lattice_(lattice), field_(field), values_(std::move(simple_values)) {
  auto simple = lattice_.simple_roots();
  if (values_.size() != simple.size())
    throw std::invalid_argument("need one value per simple root");
  for (auto& v : values_) {
    v = field_.reduce(v);
    if (v == 0) throw std::invalid_argument("character values must be nonzero");
  }
}

Character Character::random(const lat::PicardLattice& lattice, const Fp& field,
                            std::mt19937_64& rng) {
  std::size_t k = lattice.simple_roots().size();
  std::vector<std::int64_t> vals(k);
  for (std::size_t i = 0; i < k; ++i)
    vals[i] = 1 + (std::int64_t)(rng() % (std::uint64_t)(field.p() - 1));
  return Character(lattice, field, std::move(vals));
}

std::int64_t Character::operator()(const lat::Ivec& root) const {
  auto n = lattice_.decompose_in_simple_roots(root);
  std::int64_t r = 1;
  for (std::size_t j = 0; j < n.size(); ++j)
    r = field_.mul(r, field_.pow(values_[j], n[j]));
  return r;
}

Character Character::conditioned(const lat::Ivec& target_root) const {
  auto n = lattice_.decompose_in_simple_roots(target_root);
  int j = -1;
  for (std::size_t k = 0; k < n.size(); ++k)
    if (n[k] == 1 || n[k] == -1) {
      j = (int)k;
      break;
    }
  if (j < 0) throw std::logic_error("no unit coefficient to adjust");
  std::int64_t rest = 1;
  for (std::size_t k = 0; k < n.size(); ++k)
    if ((int)k != j) rest = field_.mul(rest, field_.pow(values_[k], n[k]));
  auto vals = values_;
  vals[j] = n[j] == 1 ? field_.inv(rest) : rest;
  return Character(lattice_, field_, std::move(vals));
}

std::vector<lat::Ivec> positive_roots(const lat::PicardLattice& lattice) {
  std::vector<lat::Ivec> out;
  for (const auto& r : lattice.roots()) {
    for (auto v : r) {
      if (v > 0) {
        out.push_back(r);
        break;
      }
      if (v < 0) break;
    }
  }
  return out;
}

std::optional<lat::Ivec> divisor_witness(const Character& chi) {
  for (const auto& r : positive_roots(chi.lattice()))
    if (chi(r) == 1) return r;
  return std::nullopt;
}

bool in_divisor(const Character& chi) { return divisor_witness(chi).has_value(); }

Point normalize(const Fp& f, Point p) {
  p.x = f.reduce(p.x);
  p.y = f.reduce(p.y);
  p.z = f.reduce(p.z);
  std::int64_t last = p.z ? p.z : (p.y ? p.y : p.x);
  if (last == 0) throw std::invalid_argument("zero vector is not projective");
  std::int64_t s = f.inv(last);
  return {f.mul(p.x, s), f.mul(p.y, s), f.mul(p.z, s)};
}

Point cubic_point(const Fp& f, std::int64_t t) {
  t = f.reduce(t);
  if (t == 0) throw std::invalid_argument("t = 0 is the node");
  std::int64_t om = f.sub(1, t), op = f.add(1, t);
  Point p{f.mul(4, f.mul(t, om)), f.mul(4, f.mul(t, op)), f.mul(om, f.mul(om, om))};
  return normalize(f, p);
}

bool on_cubic(const Fp& f, const Point& p) {
  std::int64_t lhs = f.mul(f.mul(p.y, p.y), p.z);
  std::int64_t rhs = f.mul(f.mul(p.x, p.x), f.add(p.x, p.z));
  return lhs == rhs;
}

bool collinear(const Fp& f, const Point& a, const Point& b, const Point& c) {
  return det_mod(f, {{a.x, a.y, a.z}, {b.x, b.y, b.z}, {c.x, c.y, c.z}}) == 0;
}

namespace {

std::vector<std::int64_t> veronese(const Fp& f, const Point& p) {
  return {f.mul(p.x, p.x), f.mul(p.y, p.y), f.mul(p.z, p.z),
          f.mul(p.x, p.y), f.mul(p.x, p.z), f.mul(p.y, p.z)};
}

}  // namespace

bool on_conic(const Fp& f, const std::array<Point, 6>& pts) {
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& p : pts) m.push_back(veronese(f, p));
  return det_mod(f, std::move(m)) == 0;
}

PositionReport general_position(const Fp& f, const Configuration& c) {
  int n = (int)c.points.size();
  PositionReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c.points[i] == c.points[j]) rep.coincident.push_back({i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (collinear(f, c.points[i], c.points[j], c.points[k]))
          rep.collinear_triples.push_back({i, j, k});
  for (int omit = n - 1; omit >= 0; --omit) {
    std::array<Point, 6> six;
    std::array<int, 6> idx;
    int w = 0;
    for (int i = 0; i < n; ++i) {
      if (i == omit) continue;
      six[w] = c.points[i];
      idx[w] = i;
      ++w;
    }
    if (w != 6) throw std::invalid_argument("need exactly seven points");
    if (on_conic(f, six)) rep.conic_sextuples.push_back(idx);
  }
  std::sort(rep.conic_sextuples.begin(), rep.conic_sextuples.end());
  return rep;
}

std::vector<std::int64_t> torus_parameters(const Character& chi) {
  const auto& f = chi.field();
  const auto& c = chi.simple_values();
  if (chi.lattice().degree() != 2)
    throw std::invalid_argument("torus parameters need degree 2");
  // s_1 = 1 and s_i / s_{i+1} = chi(E_i - E_{i+1})
  std::vector<std::int64_t> s(8);
  s[1] = 1;
  for (int i = 1; i <= 6; ++i) s[i + 1] = f.mul(s[i], f.inv(c[i]));
  // rescale by u so that chi extends with H -> 1:
  // chi(H - E1 - E2 - E3) = (t1 t2 t3)^-1 forces (u^3) s1 s2 s3 = 1 / c0
  std::int64_t h = f.mul(c[0], f.mul(s[1], f.mul(s[2], s[3])));
  std::int64_t u = f.cbrt(f.inv(h));
  std::vector<std::int64_t> t(7);
  for (int i = 1; i <= 7; ++i) t[i - 1] = f.mul(u, s[i]);
  return t;
}

Configuration points_from_torus_unchecked(const Character& chi) {
  Configuration cfg;
  cfg.t = torus_parameters(chi);
  for (auto t : cfg.t) cfg.points.push_back(cubic_point(chi.field(), t));
  return cfg;
}

Configuration points_from_torus(const Character& chi) {
  if (auto w = divisor_witness(chi))
    throw std::invalid_argument("character lies on the root divisor");
  return points_from_torus_unchecked(chi);
}

PositionReport predicted_violations(const lat::PicardLattice& lattice,
                                    const lat::Ivec& root) {
  auto type = lattice.root_type(root);
  int n = lattice.rank() - 1;
  PositionReport rep;
  if (type.tag == "ZIJ") {
    int i = std::min(type.indices[0], type.indices[1]) - 1;
    int j = std::max(type.indices[0], type.indices[1]) - 1;
    rep.coincident.push_back({i, j});
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      std::array<int, 3> tri{i, j, k};
      std::sort(tri.begin(), tri.end());
      rep.collinear_triples.push_back(tri);
    }
    std::sort(rep.collinear_triples.begin(), rep.collinear_triples.end());
    for (int omit = 0; omit < n; ++omit) {
      if (omit == i || omit == j) continue;
      std::array<int, 6> idx;
      int w = 0;
      for (int k = 0; k < n; ++k)
        if (k != omit) idx[w++] = k;
      rep.conic_sextuples.push_back(idx);
    }
    std::sort(rep.conic_sextuples.begin(), rep.conic_sextuples.end());
  } else if (type.tag == "ZIJK") {
    std::array<int, 3> tri{type.indices[0] - 1, type.indices[1] - 1, type.indices[2] - 1};
    std::sort(tri.begin(), tri.end());
    rep.collinear_triples.push_back(tri);
  } else if (type.tag == "ZI") {
    int omit = type.indices[0] - 1;
    std::array<int, 6> idx;
    int w = 0;
    for (int k = 0; k < n; ++k)
      if (k != omit) idx[w++] = k;
    rep.conic_sextuples.push_back(idx);
  } else {
    throw std::invalid_argument("no prediction for this root type");
  }
  return rep;
}

EquivalenceStats equivalence_experiment(const lat::PicardLattice& lattice, const Fp& field,
                                        std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  EquivalenceStats stats;
  stats.trials = trials;
  for (int i = 0; i < trials; ++i) {
    auto chi = Character::random(lattice, field, rng);
    bool d = in_divisor(chi);
    auto cfg = points_from_torus_unchecked(chi);
    bool ok = general_position(field, cfg).ok();
    if (d) ++stats.divisor_hits;
    if (d == !ok) ++stats.agreements;
  }
  return stats;
}

ConditionedTrial conditioned_trial(const lat::PicardLattice& lattice, const Fp& field,
                                   std::uint64_t seed, const lat::Ivec& target_root,
                                   int max_resamples) {
  std::mt19937_64 rng(seed);
  auto positives = positive_roots(lattice);
  for (int attempt = 0; attempt < max_resamples; ++attempt) {
    auto chi = Character::random(lattice, field, rng).conditioned(target_root);
    std::vector<lat::Ivec> vanishing;
    for (const auto& r : positives)
      if (chi(r) == 1) vanishing.push_back(r);
    if (vanishing.size() != 1 || vanishing[0] != target_root) continue;
    ConditionedTrial trial;
    trial.root = target_root;
    trial.type = lattice.root_type(target_root).tag;
    trial.predicted = predicted_violations(lattice, target_root);
    trial.actual = general_position(field, points_from_torus_unchecked(chi));
    trial.match = trial.predicted == trial.actual;
    trial.resamples = attempt;
    return trial;
  }
  throw budget_error("conditioned sampling budget exhausted");
}

}  // namespace e7kit::torus
