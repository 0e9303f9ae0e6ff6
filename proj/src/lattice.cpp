#include "e7kit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "e7kit/errors.hpp"

namespace e7kit::lat {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in lattice arithmetic");
  return static_cast<std::int64_t>(v);
}

// Exact rational scalar for the linear solver.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rat of(std::int64_t n, std::int64_t d = 1) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rat{n, d};
  }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
};

Rat operator*(const Rat& a, const Rat& b) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rat::of(checked(n), checked(d));
}

Rat operator-(const Rat& a, const Rat& b) {
  __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rat::of(checked(n), checked(d));
}

Rat inverse(const Rat& a) {
  if (a.num == 0) throw std::domain_error("division by zero");
  return Rat::of(a.den, a.num);
}

std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) return -1;
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

Ivec add(const Ivec& a, const Ivec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Ivec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Ivec sub(const Ivec& a, const Ivec& b) { return add(a, neg(b)); }

Ivec neg(const Ivec& a) {
  Ivec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Ivec scale(std::int64_t c, const Ivec& a) {
  Ivec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked(static_cast<__int128>(c) * a[i]);
  return out;
}

std::int64_t int_det(std::vector<Ivec> rows) {
  std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && rows[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(rows[piv], rows[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(rows[i][j]) * rows[k][k] -
                     static_cast<__int128>(rows[i][k]) * rows[k][j];
        rows[i][j] = checked(v / prev);  // exact by the fraction-free identity
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  return sign * rows[n - 1][n - 1];
}

std::optional<Ivec> solve_linear_integer(const std::vector<Ivec>& columns, const Ivec& rhs) {
  std::size_t k = columns.size();
  std::size_t m = rhs.size();
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("column dimension mismatch");

  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = Rat::of(columns[c][r]);
    a[r][k] = Rat::of(rhs[r]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    Rat inv = inverse(a[row][col]);
    for (std::size_t j = col; j <= k; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (std::size_t j = col; j <= k; ++j) a[r][j] = a[r][j] - f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  if (pivot_col.size() < k) return std::nullopt;  // dependent or deficient columns
  for (std::size_t r = row; r < m; ++r)
    if (!a[r][k].is_zero()) return std::nullopt;

  Ivec out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!a[i][k].is_integer()) return std::nullopt;
    out[pivot_col[i]] = a[i][k].num;
  }
  return out;
}

PicardLattice::PicardLattice(int degree) : degree_(degree) {
  if (degree < 1 || degree > 7) throw std::invalid_argument("degree must be 1..7");
}

void PicardLattice::check_dim(const Ivec& a) const {
  if (static_cast<int>(a.size()) != rank()) throw std::invalid_argument("vector has wrong rank");
}

Ivec PicardLattice::H() const {
  Ivec v(rank(), 0);
  v[0] = 1;
  return v;
}

Ivec PicardLattice::E(int i) const {
  if (i < 1 || i > points()) throw std::invalid_argument("point index out of range");
  Ivec v(rank(), 0);
  v[i] = 1;
  return v;
}

Ivec PicardLattice::canonical() const {
  Ivec v(rank(), 1);
  v[0] = -3;
  return v;
}

std::int64_t PicardLattice::pair(const Ivec& a, const Ivec& b) const {
  check_dim(a);
  check_dim(b);
  __int128 s = static_cast<__int128>(a[0]) * b[0];
  for (int i = 1; i < rank(); ++i) s -= static_cast<__int128>(a[i]) * b[i];
  return checked(s);
}

Ivec PicardLattice::reflect(const Ivec& root, const Ivec& x) const {
  if (pair(root, root) != -2) throw std::invalid_argument("reflection vector must have square -2");
  return add(x, scale(pair(x, root), root));
}

std::vector<Ivec> PicardLattice::roots() const {
  int n = points();
  std::vector<Ivec> out;
  auto push_pm = [&](const Ivec& v) {
    out.push_back(v);
    out.push_back(neg(v));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(sub(E(i), E(j)));
  for (int mask = 0; mask < (1 << n); ++mask) {
    int pc = __builtin_popcount(static_cast<unsigned>(mask));
    if (pc == 3 || pc == 6) {
      Ivec v(rank(), 0);
      v[0] = pc == 3 ? 1 : 2;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) v[i] = -1;
      push_pm(v);
    }
  }
  if (n == 8) {
    for (int i = 1; i <= n; ++i) {
      Ivec v(rank(), -1);
      v[0] = 3;
      v[i] = -2;
      push_pm(v);
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("duplicate in root enumeration");
  return out;
}

namespace {

// All (a, b_1..b_n) with sum b_i^2 = a^2 - normsq, sum b_i = -3a - kdot,
// by depth-first search with Cauchy-Schwarz pruning on each suffix.
std::vector<Ivec> bounded_search(const PicardLattice& L, std::int64_t normsq, std::int64_t kdot) {
  if (L.degree() < 2) throw e7kit::budget_error("bounded search is limited to degree >= 2");
  int n = L.points();
  std::vector<Ivec> out;
  Ivec cur(L.rank(), 0);

  auto feasible = [](std::int64_t sum, std::int64_t sumsq, int slots) {
    if (slots == 0) return sum == 0 && sumsq == 0;
    return sumsq >= 0 && sum * sum <= static_cast<std::int64_t>(slots) * sumsq;
  };

  // recursion over b_i given remaining target sum and sum of squares
  auto rec = [&](auto&& self, int i, std::int64_t sum, std::int64_t sumsq) -> void {
    if (i > n) {
      if (sum == 0 && sumsq == 0) out.push_back(cur);
      return;
    }
    std::int64_t bmax = isqrt64(sumsq);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (!feasible(sum - b, sumsq - b * b, n - i)) continue;
      cur[i] = b;
      self(self, i + 1, sum - b, sumsq - b * b);
    }
    cur[i] = 0;
  };

  for (std::int64_t a = -4; a <= 4; ++a) {
    std::int64_t sumsq = a * a - normsq;
    std::int64_t sum = -3 * a - kdot;
    if (!feasible(sum, sumsq, n)) continue;
    cur[0] = a;
    rec(rec, 1, sum, sumsq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Ivec> PicardLattice::roots_blind() const { return bounded_search(*this, -2, 0); }

std::vector<Ivec> PicardLattice::exceptional_blind() const { return bounded_search(*this, -1, -1); }

std::vector<Ivec> PicardLattice::exceptional_classes() const {
  if (degree_ < 2) throw e7kit::budget_error("exceptional enumeration is limited to degree >= 2");
  int n = points();
  std::vector<Ivec> out;
  for (int i = 1; i <= n; ++i) out.push_back(E(i));
  for (int mask = 0; mask < (1 << n); ++mask) {
    int pc = __builtin_popcount(static_cast<unsigned>(mask));
    if (pc != 2 && pc != 5) continue;
    Ivec v(rank(), 0);
    v[0] = pc == 2 ? 1 : 2;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) v[i] = -1;
    out.push_back(v);
  }
  if (n == 7) {
    for (int i = 1; i <= n; ++i) {
      Ivec v(rank(), -1);
      v[0] = 3;
      v[i] = -2;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ivec PicardLattice::geiser(const Ivec& e) const {
  if (degree_ != 2) throw std::invalid_argument("the Geiser pairing needs degree 2");
  if (pair(e, e) != -1 || pair(e, canonical()) != -1)
    throw std::invalid_argument("not an exceptional class");
  return neg(add(canonical(), e));
}

std::vector<Ivec> PicardLattice::simple_roots() const {
  int n = points();
  std::vector<Ivec> out;
  if (n >= 3) out.push_back(sub(sub(sub(H(), E(1)), E(2)), E(3)));
  for (int i = 1; i < n; ++i) out.push_back(sub(E(i), E(i + 1)));
  return out;
}

Ivec PicardLattice::decompose_in_simple_roots(const Ivec& x) const {
  check_dim(x);
  auto sol = solve_linear_integer(simple_roots(), x);
  if (!sol) throw std::domain_error("not an integer combination of the simple roots");
  return *sol;
}

RootType PicardLattice::root_type(const Ivec& root) const {
  if (pair(root, root) != -2 || pair(root, canonical()) != 0)
    throw std::invalid_argument("not a root");
  int n = points();
  std::int64_t a = root[0];
  int s = a > 0 ? 1 : (a < 0 ? -1 : 0);
  RootType t;
  t.hsign = s;
  if (a == 0) {
    t.tag = "ZIJ";
    int pos = 0, negi = 0;
    for (int i = 1; i <= n; ++i) {
      if (root[i] == 1) pos = i;
      if (root[i] == -1) negi = i;
    }
    t.indices = {pos, negi};
  } else if (a == 1 || a == -1) {
    t.tag = "ZIJK";
    for (int i = 1; i <= n; ++i)
      if (root[i] == -s) t.indices.push_back(i);
  } else if (a == 2 || a == -2) {
    t.tag = "ZI";  // labeled by the omitted points
    for (int i = 1; i <= n; ++i)
      if (root[i] == 0) t.indices.push_back(i);
  } else {
    t.tag = "OTHER";
    for (int i = 1; i <= n; ++i)
      if (root[i] == 2 || root[i] == -2) t.indices.push_back(i);
  }
  return t;
}

ExceptionalType PicardLattice::exceptional_type(const Ivec& e) const {
  if (pair(e, e) != -1 || pair(e, canonical()) != -1)
    throw std::invalid_argument("not an exceptional class");
  int n = points();
  ExceptionalType t;
  switch (e[0]) {
    case 0:
      t.tag = "E";
      for (int i = 1; i <= n; ++i)
        if (e[i] == 1) t.indices.push_back(i);
      break;
    case 1:
      t.tag = "HEE";
      for (int i = 1; i <= n; ++i)
        if (e[i] == -1) t.indices.push_back(i);
      break;
    case 2:
      t.tag = "2H5E";
      for (int i = 1; i <= n; ++i)
        if (e[i] == -1) t.indices.push_back(i);
      break;
    case 3:
      t.tag = "3H2E6E";
      for (int i = 1; i <= n; ++i)
        if (e[i] == -2) t.indices.push_back(i);
      break;
    default:
      throw std::logic_error("unclassified exceptional class");
  }
  return t;
}

f2::Vec Mod2Quotient::reduce_coords(const f2::Vec& simple_coords) const {
  return proj.apply(simple_coords);
}

f2::Vec Mod2Quotient::reduce(const Ivec& x) const {
  Ivec c = lattice.decompose_in_simple_roots(x);
  f2::Vec v(static_cast<int>(simple.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] & 1) v.set(static_cast<int>(i), true);
  return proj.apply(v);
}

f2::Mat Mod2Quotient::push_matrix(const f2::Mat& m_on_simple) const {
  return proj * m_on_simple * section;
}

Mod2Quotient orthogonal_complement_mod2(const PicardLattice& lattice) {
  if (lattice.degree() > 6) throw std::invalid_argument("mod-2 reduction needs degree <= 6");
  auto simple = lattice.simple_roots();
  int k = static_cast<int>(simple.size());
  f2::Mat gram2(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram2.set(i, j, lattice.pair(simple[i], simple[j]) & 1);

  auto split = f2::symplectic_split(gram2);
  int g = static_cast<int>(split.e.size());

  f2::Mat proj(2 * g, k);
  for (int i = 0; i < g; ++i) {
    proj.set_row(i, gram2.apply(split.f[i]));
    proj.set_row(g + i, gram2.apply(split.e[i]));
  }
  f2::Mat section(k, 2 * g);
  for (int j = 0; j < g; ++j)
    for (int r = 0; r < k; ++r) {
      section.set(r, j, split.e[j].get(r));
      section.set(r, g + j, split.f[j].get(r));
    }

  if (!((proj * section) == f2::Mat::identity(2 * g)))
    throw std::logic_error("projection is not split by the section");
  for (const auto& r : split.radical)
    if (!proj.apply(r).is_zero()) throw std::logic_error("projection does not kill the radical");
  sym::SymplecticSpace sp(g);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      f2::Vec ui = f2::Vec::unit(k, i), uj = f2::Vec::unit(k, j);
      if (sp.pairing(proj.apply(ui), proj.apply(uj)) != gram2.get(i, j))
        throw std::logic_error("projection does not transport the pairing");
    }

  return Mod2Quotient{lattice, std::move(simple), std::move(gram2), std::move(split.radical),
                      g, std::move(proj), std::move(section)};
}

}  // namespace e7kit::lat
