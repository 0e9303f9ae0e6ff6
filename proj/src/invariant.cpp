#include "e7kit/invariant.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace e7kit::inv {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > 31) throw std::invalid_argument("nvars must be in 0..31");
}

// sort then cancel terms appearing an even number of times
std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i;
    while (j < raw.size() && raw[j] == raw[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(raw[i]);
    i = j;
  }
  return out;
}

}  // namespace

SquareFreePoly::SquareFreePoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

SquareFreePoly SquareFreePoly::one(int nvars) {
  SquareFreePoly p(nvars);
  p.terms_ = {0};
  return p;
}

SquareFreePoly SquareFreePoly::variable(int nvars, int i) {
  check_nvars(nvars);
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  SquareFreePoly p(nvars);
  p.terms_ = {1u << i};
  return p;
}

SquareFreePoly SquareFreePoly::linear(const f2::Vec& coeffs) {
  SquareFreePoly p(coeffs.size());
  for (int i = 0; i < coeffs.size(); ++i)
    if (coeffs.get(i)) p.terms_.push_back(1u << i);
  return p;
}

SquareFreePoly SquareFreePoly::from_terms(int nvars, std::vector<std::uint32_t> terms) {
  check_nvars(nvars);
  SquareFreePoly p(nvars);
  std::uint32_t allowed = nvars == 31 ? 0x7fffffffu : (1u << nvars) - 1;
  for (auto t : terms)
    if (t & ~allowed) throw std::invalid_argument("term uses a variable out of range");
  p.terms_ = normalize(std::move(terms));
  return p;
}

int SquareFreePoly::degree() const {
  int d = -1;
  for (auto t : terms_) d = std::max(d, std::popcount(t));
  return d;
}

SquareFreePoly SquareFreePoly::piece(int d) const {
  SquareFreePoly p(nvars_);
  for (auto t : terms_)
    if (std::popcount(t) == d) p.terms_.push_back(t);
  return p;
}

SquareFreePoly SquareFreePoly::truncated(int maxdeg) const {
  if (maxdeg < 0) return *this;
  SquareFreePoly p(nvars_);
  for (auto t : terms_)
    if (std::popcount(t) <= maxdeg) p.terms_.push_back(t);
  return p;
}

SquareFreePoly SquareFreePoly::operator+(const SquareFreePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  SquareFreePoly p(nvars_);
  // symmetric difference of two sorted term lists
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                o.terms_.end(), std::back_inserter(p.terms_));
  return p;
}

SquareFreePoly mul_capped(const SquareFreePoly& a, const SquareFreePoly& b, int maxdeg) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  std::vector<std::uint32_t> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (auto s : a.terms())
    for (auto t : b.terms()) {
      if (s & t) continue;  // a_i^2 = 0
      std::uint32_t u = s | t;
      if (maxdeg >= 0 && std::popcount(u) > maxdeg) continue;
      raw.push_back(u);
    }
  return SquareFreePoly::from_terms(a.nvars(), std::move(raw));
}

SquareFreePoly SquareFreePoly::operator*(const SquareFreePoly& o) const {
  return mul_capped(*this, o, -1);
}

std::string SquareFreePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto t : terms_) {
    if (!out.empty()) out += " + ";
    if (t == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 0; i < nvars_; ++i)
      if (t & (1u << i)) {
        if (!first) out += "*";
        out += "a" + std::to_string(i);
        first = false;
      }
  }
  return out;
}

SquareFreePoly sigma(int nvars, int d) {
  check_nvars(nvars);
  if (d < 0 || d > nvars) return SquareFreePoly(nvars);
  // enumerate popcount-d masks in increasing order (Gosper's hack)
  if (d == 0) return SquareFreePoly::one(nvars);
  std::uint32_t full = nvars == 31 ? 0x7fffffffu : (1u << nvars) - 1;
  if (d == nvars) return SquareFreePoly::from_terms(nvars, {full});
  std::vector<std::uint32_t> terms;
  std::uint32_t m = (1u << d) - 1, limit = full + 1;
  while (m < limit) {
    terms.push_back(m);
    std::uint32_t c = m & -m, r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return SquareFreePoly::from_terms(nvars, std::move(terms));
}

SquareFreePoly elementary_symmetric(int nvars, const std::vector<SquareFreePoly>& xs,
                                    int d, int maxdeg) {
  if (d < 0) throw std::invalid_argument("negative degree");
  for (const auto& x : xs)
    if (x.nvars() != nvars) throw std::invalid_argument("variable count mismatch");
  std::vector<SquareFreePoly> e(d + 1, SquareFreePoly(nvars));
  e[0] = SquareFreePoly::one(nvars);
  for (const auto& x : xs)
    for (int j = d; j >= 1; --j)
      e[j] = e[j] + mul_capped(e[j - 1], x, maxdeg);
  return e[d];
}

SquareFreePoly pullback(const f2::Mat& m, const SquareFreePoly& p) {
  if (p.nvars() != m.rows())
    throw std::invalid_argument("polynomial variables do not match matrix rows");
  check_nvars(m.cols());
  std::vector<SquareFreePoly> row_form;
  row_form.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    row_form.push_back(SquareFreePoly::linear(m.row(i)));
  SquareFreePoly out(m.cols());
  for (auto t : p.terms()) {
    auto prod = SquareFreePoly::one(m.cols());
    for (int i = 0; i < p.nvars(); ++i)
      if (t & (1u << i)) prod = prod * row_form[i];
    out = out + prod;
  }
  return out;
}

SquareFreePoly sw_total_of_perm_rep(const ab2::ActionReport& report, int maxdeg) {
  int k = report.num_generators;
  auto total = SquareFreePoly::one(k);
  auto unit = SquareFreePoly::one(k);
  for (const auto& orbit : report.orbits)
    for (const auto& chi : orbit.characters)
      total = mul_capped(total, unit + SquareFreePoly::linear(chi), maxdeg);
  return total;
}

SquareFreePoly sw_piece(const ab2::ActionReport& report, int d) {
  return sw_total_of_perm_rep(report, d).piece(d);
}

const ModuleTable& sp6_module_table() {
  static const ModuleTable t{
      "Inv(B Sp6(2))",
      {0, 2, 3, 4, 6},
      {"1", "w2", "f3", "w4", "w6"},
      "stated as rank four; five generators listed",
  };
  return t;
}

const ModuleTable& we7_module_table() {
  static const ModuleTable t{
      "Inv(B W(E7))",
      {0, 1, 2, 3, 3, 4, 4, 5, 6, 7},
      {"1", "w1", "w2", "w3", "f3", "w1*f3", "w4", "w5", "w6", "w7"},
      "f3-type generators are witnessed only as metadata here",
  };
  return t;
}

}  // namespace e7kit::inv
