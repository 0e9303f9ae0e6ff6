#include "e7kit/symplectic.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace e7kit::sym {

f2::Mat QuadraticForm::coeffs() const {
  int n = space_.dim(), g = space_.g();
  f2::Mat c(n, n);
  for (int i = 0; i < n; ++i) c.set(i, i, diag_.get(i));
  for (int i = 0; i < g; ++i) c.set(i, g + i, true);
  return c;
}

QuadraticForm QuadraticForm::from_coeffs(const SymplecticSpace& s, const f2::Mat& upper) {
  int n = s.dim(), g = s.g();
  if (upper.rows() != n || upper.cols() != n)
    throw std::invalid_argument("QuadraticForm: coeffs shape");
  f2::Vec d(n, 0);
  for (int i = 0; i < n; ++i) {
    d.set(i, upper.get(i, i));
    for (int j = 0; j < i; ++j)
      if (upper.get(i, j)) throw std::invalid_argument("QuadraticForm: coeffs not upper triangular");
    for (int j = i + 1; j < n; ++j) {
      bool want = (j == i + g);  // forced by polarization against the standard form
      if (upper.get(i, j) != want)
        throw std::invalid_argument("QuadraticForm: off diagonal does not polarize to the standard form");
    }
  }
  return QuadraticForm(s, d);
}

QuadraticForm QuadraticForm::from_isotropic_pair(const SymplecticSpace& s,
                                                 const std::vector<f2::Vec>& basis1,
                                                 const std::vector<f2::Vec>& basis2) {
  int g = s.g(), n = s.dim();
  if ((int)basis1.size() != g || (int)basis2.size() != g)
    throw std::invalid_argument("from_isotropic_pair: need g vectors per side");
  auto check_isotropic = [&](const std::vector<f2::Vec>& b) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        if (s.pairing(b[i], b[j]))
          throw std::invalid_argument("from_isotropic_pair: span is not isotropic");
  };
  check_isotropic(basis1);
  check_isotropic(basis2);
  // Columns (basis1 | basis2) must be invertible.
  f2::Mat cols(n, n);
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < n; ++i) {
      cols.set(i, j, basis1[j].get(i));
      cols.set(i, g + j, basis2[j].get(i));
    }
  f2::Mat inv = cols.inverse();  // throws if the two spans are not complementary
  f2::Vec values(n, 0);
  for (int b = 0; b < n; ++b) {
    f2::Vec c = inv.apply(f2::Vec::unit(n, b));
    f2::Vec x1 = f2::Vec::zero(n), x2 = f2::Vec::zero(n);
    for (int j = 0; j < g; ++j) {
      if (c.get(j)) x1 += basis1[j];
      if (c.get(g + j)) x2 += basis2[j];
    }
    values.set(b, s.pairing(x1, x2));
  }
  return from_values_on_basis(s, values);
}

uint64_t QuadraticForm::zero_count() const {
  int n = space_.dim();
  uint64_t zeros = 0;
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
    if (!eval(f2::Vec(n, x))) ++zeros;
  return zeros;
}

std::string QuadraticForm::hex() const {
  int n = space_.dim();
  f2::Mat c = coeffs();
  f2::Vec packed(n * (n + 1) / 2, 0);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) packed.set(k++, c.get(i, j));
  return packed.hex();
}

QuadraticForm QuadraticForm::from_hex(const SymplecticSpace& s, const std::string& h) {
  int n = s.dim();
  f2::Vec packed = f2::Vec::from_hex(n * (n + 1) / 2, h);
  f2::Mat c(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) c.set(i, j, packed.get(k++));
  return from_coeffs(s, c);
}

Symplectomorphism::Symplectomorphism(const SymplecticSpace& s, const f2::Mat& m)
    : space_(s), mat_(m) {
  int n = s.dim();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("Symplectomorphism: shape");
  f2::Mat gram = s.gram();
  if (m.transposed() * gram * m != gram)
    throw std::invalid_argument("Symplectomorphism: does not preserve the form");
}

Symplectomorphism Symplectomorphism::transvection(const SymplecticSpace& s, const f2::Vec& v) {
  if (v.size() != s.dim()) throw std::invalid_argument("transvection: length");
  f2::Vec ov = s.omega(v);
  f2::Mat m(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    f2::Vec row = f2::Vec::unit(s.dim(), i);
    if (v.get(i)) row += ov;
    m.set_row(i, row);
  }
  return Symplectomorphism(s, m);
}

QuadraticForm Symplectomorphism::apply(const QuadraticForm& q) const {
  f2::Mat inv = mat_.inverse();  // symplectic, hence invertible
  int n = space_.dim();
  f2::Vec values(n, 0);
  for (int b = 0; b < n; ++b)
    values.set(b, q.eval(inv.apply(f2::Vec::unit(n, b))));
  return QuadraticForm::from_values_on_basis(space_, values);
}

WElement Symplectomorphism::apply(const WElement& w) const {
  if (!w.is_form()) return WElement::from_vector(mat_.apply(w.data()));
  return WElement::from_form(apply(w.to_form(space_)));
}

Symplectomorphism Symplectomorphism::inverse() const {
  f2::Mat gram = space_.gram();
  return Symplectomorphism(space_, gram * mat_.transposed() * gram);
}

namespace {
bool q0_value(int g, uint64_t bits) {
  uint64_t lo = bits & ((uint64_t{1} << g) - 1);
  return f2::parity64(lo & (bits >> g));
}
}  // namespace

bool is_aronhold(const AronholdBasis& basis) {
  const SymplecticSpace& s = basis.space;
  int g = s.g(), n = 2 * g + 1;
  if ((int)basis.forms.size() != n) return false;
  for (const QuadraticForm& q : basis.forms)
    if (q.space() != s) return false;

  std::vector<f2::Vec> lifts;
  std::vector<uint64_t> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = basis.forms[i].from_base().bits();
    lifts.push_back(WElement::from_form(basis.forms[i]).lift());
  }
  if (f2::span_rank(lifts) != n) return false;

  bool eps = arf_epsilon(g);
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if ((size & 1) == 0) continue;
    uint64_t ws = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) ws ^= w[i];
    bool want = eps ^ (((size - 1) / 2) & 1);
    if (q0_value(g, ws) != want) return false;  // arf(q0 + ws) = q0(ws)
  }
  return true;
}

std::vector<f2::Vec> aronhold_to_symplectic(const AronholdBasis& basis) {
  const SymplecticSpace& s = basis.space;
  int g = s.g();
  if ((int)basis.forms.size() != 2 * g + 1)
    throw std::invalid_argument("aronhold_to_symplectic: wrong size");
  std::vector<f2::Vec> w;
  for (const QuadraticForm& q : basis.forms) w.push_back(q.from_base());

  std::vector<f2::Vec> out;
  for (int i = 1; i <= g; ++i) out.push_back(w[2 * i - 2] + w[2 * i - 1]);
  for (int i = 1; i <= g; ++i) {
    f2::Vec acc = w[2 * g];  // q_{2g+1}
    for (int j = 1; j <= 2 * i - 1; ++j) acc += w[j - 1];
    out.push_back(acc);
  }
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (s.pairing(out[i], out[j]) != false || s.pairing(out[g + i], out[g + j]) != false ||
          s.pairing(out[i], out[g + j]) != (i == j))
        throw std::invalid_argument("aronhold_to_symplectic: result is not a symplectic basis");
    }
  return out;
}

namespace {
bool is_symplectic_basis(const SymplecticSpace& s, const std::vector<f2::Vec>& b) {
  int g = s.g();
  if ((int)b.size() != 2 * g) return false;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (s.pairing(b[i], b[j]) || s.pairing(b[g + i], b[g + j]) ||
          s.pairing(b[i], b[g + j]) != (i == j))
        return false;
  return true;
}
}  // namespace

AronholdBasis symplectic_to_aronhold(const SymplecticSpace& s,
                                     const std::vector<f2::Vec>& basis) {
  int g = s.g(), n = 2 * g + 1;
  if (!is_symplectic_basis(s, basis))
    throw std::invalid_argument("symplectic_to_aronhold: input is not a symplectic basis");
  const f2::Vec* e = basis.data();
  const f2::Vec* f = basis.data() + g;

  std::vector<AronholdBasis> hits;
  for (uint64_t seed = 0; seed < (uint64_t{1} << (2 * g)); ++seed) {
    std::vector<f2::Vec> w(n, f2::Vec::zero(2 * g));
    w[0] = f2::Vec(2 * g, seed);
    for (int k = 1; k <= 2 * g - 1; ++k) {
      if (k & 1) w[k] = w[k - 1] + e[(k - 1) / 2];
      else w[k] = w[k - 1] + f[k / 2 - 1] + f[k / 2];
    }
    w[n - 1] = w[0] + f[0];
    AronholdBasis cand{s, {}};
    for (int i = 0; i < n; ++i)
      cand.forms.push_back(QuadraticForm::base(s).translate(w[i]));
    if (!is_aronhold(cand)) continue;
    if (aronhold_to_symplectic(cand) == basis) hits.push_back(cand);
  }
  if (hits.size() != 1)
    throw std::logic_error("symplectic_to_aronhold: expected exactly one preimage");
  return hits[0];
}

std::vector<QuadraticForm> enumerate_forms(int g) {
  if (g < 1) throw std::invalid_argument("enumerate_forms: genus");
  if (g > 4) throw budget_error("form enumeration is capped at genus 4");
  SymplecticSpace s(g);
  std::vector<QuadraticForm> out;
  out.reserve(uint64_t{1} << (2 * g));
  for (uint64_t d = 0; d < (uint64_t{1} << (2 * g)); ++d)
    out.emplace_back(s, f2::Vec(2 * g, d));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void aronhold_backtrack(const SymplecticSpace& s, const std::vector<QuadraticForm>& pool,
                        std::vector<int>& picked, std::vector<AronholdBasis>& out) {
  int g = s.g(), n = 2 * g + 1;
  if ((int)picked.size() == n) {
    AronholdBasis b{s, {}};
    for (int i : picked) b.forms.push_back(pool[i]);
    if (is_aronhold(b)) out.push_back(b);
    return;
  }
  int k = (int)picked.size();
  bool eps = arf_epsilon(g);
  for (int c = 0; c < (int)pool.size(); ++c) {
    bool used = false;
    for (int i : picked)
      if (i == c) { used = true; break; }
    if (used) continue;
    // Partial checks: independence and the odd subset rule restricted to
    // subsets containing the new element.
    std::vector<f2::Vec> lifts;
    std::vector<uint64_t> w;
    for (int i : picked) {
      lifts.push_back(WElement::from_form(pool[i]).lift());
      w.push_back(pool[i].from_base().bits());
    }
    lifts.push_back(WElement::from_form(pool[c]).lift());
    w.push_back(pool[c].from_base().bits());
    if (f2::span_rank(lifts) != k + 1) continue;
    bool ok = true;
    for (uint32_t mask = 0; mask < (uint32_t{1} << k) && ok; ++mask) {
      int size = std::popcount(mask) + 1;
      if ((size & 1) == 0) continue;
      uint64_t ws = w[k];
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1) ws ^= w[i];
      if (q0_value(g, ws) != (eps ^ (((size - 1) / 2) & 1))) ok = false;
    }
    if (!ok) continue;
    picked.push_back(c);
    aronhold_backtrack(s, pool, picked, out);
    picked.pop_back();
  }
}
}  // namespace

std::vector<AronholdBasis> all_aronhold_bases(int g) {
  if (g < 1) throw std::invalid_argument("all_aronhold_bases: genus");
  if (g > 2) throw budget_error("aronhold basis enumeration is capped at genus 2");
  SymplecticSpace s(g);
  std::vector<QuadraticForm> pool;
  for (const QuadraticForm& q : enumerate_forms(g))
    if (q.arf() == arf_epsilon(g)) pool.push_back(q);
  std::vector<int> picked;
  std::vector<AronholdBasis> out;
  aronhold_backtrack(s, pool, picked, out);
  return out;
}

uint64_t sp_order(int g) {
  uint64_t order = uint64_t{1} << (g * g);
  for (int i = 1; i <= g; ++i) order *= (uint64_t{1} << (2 * i)) - 1;
  return order;
}

namespace {
// Matrices up to 8x8 packed one row per byte.
uint64_t packed_mul(uint64_t a, uint64_t b, int n) {
  uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    uint32_t r = (a >> (8 * i)) & 0xff;
    uint64_t acc = 0;
    while (r) {
      int k = std::countr_zero(r);
      r &= r - 1;
      acc ^= (b >> (8 * k)) & 0xff;
    }
    out |= acc << (8 * i);
  }
  return out;
}

uint64_t packed_from(const f2::Mat& m) {
  uint64_t out = 0;
  for (int i = 0; i < m.rows(); ++i) out |= m.row(i).bits() << (8 * i);
  return out;
}

f2::Mat packed_to(uint64_t p, int n) {
  f2::Mat m(n, n);
  for (int i = 0; i < n; ++i) m.set_row(i, f2::Vec(n, (p >> (8 * i)) & ((1u << n) - 1)));
  return m;
}
}  // namespace

std::vector<f2::Mat> sp_elements(int g) {
  if (g < 1) throw std::invalid_argument("sp_elements: genus");
  if (g > 3) throw budget_error("group enumeration is capped at genus 3");
  SymplecticSpace s(g);
  int n = s.dim();
  std::vector<uint64_t> gens;
  for (uint64_t v = 1; v < (uint64_t{1} << n); ++v)
    gens.push_back(packed_from(Symplectomorphism::transvection(s, f2::Vec(n, v)).matrix()));

  uint64_t id = packed_from(f2::Mat::identity(n));
  std::unordered_set<uint64_t> seen{id};
  seen.reserve(sp_order(g) * 2);
  std::queue<uint64_t> todo;
  todo.push(id);
  while (!todo.empty()) {
    uint64_t m = todo.front();
    todo.pop();
    for (uint64_t t : gens) {
      uint64_t p = packed_mul(m, t, n);
      if (seen.insert(p).second) todo.push(p);
    }
  }
  std::vector<uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<f2::Mat> out;
  out.reserve(keys.size());
  for (uint64_t p : keys) out.push_back(packed_to(p, n));
  return out;
}

Symplectomorphism random_sp_element(const SymplecticSpace& s, std::mt19937_64& rng, int steps) {
  int n = s.dim();
  Symplectomorphism acc = Symplectomorphism::identity(s);
  for (int i = 0; i < steps; ++i) {
    uint64_t v = 1 + rng() % ((uint64_t{1} << n) - 1);
    acc = acc * Symplectomorphism::transvection(s, f2::Vec(n, v));
  }
  return acc;
}

}  // namespace e7kit::sym
