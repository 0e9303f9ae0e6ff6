#include "e7kit/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7kit::perm {

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("permutation degree must be nonnegative");
  img_.resize(n);
  for (int i = 0; i < n; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("image array is not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("transposition point out of range");
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = img_[rhs.img_[i]];
  Permutation p(degree());
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
  Permutation p(degree());
  p.img_ = std::move(out);
  return p;
}

std::map<int, int> Permutation::cycle_type() const {
  std::map<int, int> type;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ++type[len];
  }
  return type;
}

std::string Permutation::cycle_type_string() const {
  std::string s;
  for (auto [len, count] : cycle_type()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(len) + "^" + std::to_string(count);
  }
  return s;
}

PermGroup::PermGroup(std::vector<Permutation> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generator list must be nonempty");
  degree_ = gens_[0].degree();
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw std::invalid_argument("generators must share a degree");
  build();
}

int PermGroup::min_moved_point(const Permutation& p) const {
  for (int i = 0; i < degree_; ++i)
    if (p(i) != i) return i;
  return -1;
}

void PermGroup::recompute_orbit(std::size_t level) {
  Level& lv = chain_[level];
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.beta);
  lv.transversal.emplace(lv.beta, Permutation(degree_));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int gamma = lv.orbit[head];
    const Permutation& u = lv.transversal.at(gamma);
    for (const auto& g : lv.gens) {
      int delta = g(gamma);
      if (!lv.transversal.count(delta)) {
        lv.orbit.push_back(delta);
        lv.transversal.emplace(delta, g * u);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < chain_.size(); ++l) {
    int gamma = p(chain_[l].beta);
    auto it = chain_[l].transversal.find(gamma);
    if (it == chain_[l].transversal.end()) return {std::move(p), l};
    p = it->second.inverse() * p;
  }
  return {std::move(p), chain_.size()};
}

void PermGroup::build() {
  std::vector<Permutation> seed;
  for (const auto& g : gens_)
    if (!g.is_identity()) seed.push_back(g);
  if (seed.empty()) return;  // trivial group, empty chain

  chain_.push_back(Level{min_moved_point(seed[0]), seed, {}, {}});
  recompute_orbit(0);

  // Verify levels bottom-up; a failed Schreier generator is sifted and
  // inserted at the level it reaches, then verification resumes there.
  std::size_t i = chain_.size();
  while (i > 0) {
    std::size_t lvl = i - 1;
    recompute_orbit(lvl);
    bool complete = true;
    std::size_t orbit_size = chain_[lvl].orbit.size();
    std::size_t gen_count = chain_[lvl].gens.size();
    for (std::size_t oi = 0; complete && oi < orbit_size; ++oi) {
      for (std::size_t gi = 0; complete && gi < gen_count; ++gi) {
        int gamma = chain_[lvl].orbit[oi];
        const Permutation& g = chain_[lvl].gens[gi];
        Permutation schreier =
            chain_[lvl].transversal.at(g(gamma)).inverse() * (g * chain_[lvl].transversal.at(gamma));
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), lvl + 1);
        if (h.is_identity()) continue;
        complete = false;
        if (j == chain_.size()) {
          chain_.push_back(Level{min_moved_point(h), {}, {}, {}});
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) chain_[l].gens.push_back(h);
        for (std::size_t l = lvl + 1; l <= j; ++l) recompute_orbit(l);
        i = j + 1;
      }
    }
    if (complete) i = lvl;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : chain_) n *= static_cast<std::uint64_t>(lv.orbit.size());
  return n;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  return level == chain_.size() && residue.is_identity();
}

}  // namespace e7kit::perm
