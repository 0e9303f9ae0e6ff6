#include "e7kit/weyl.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "e7kit/errors.hpp"

namespace e7kit::weyl {

namespace {

std::int64_t basis_pairing(int i, int j) {
  if (i != j) return 0;
  return i == 0 ? 1 : -1;
}

}  // namespace

WeylElement::WeylElement(lat::PicardLattice lattice, std::vector<lat::Ivec> columns, unchecked)
    : lattice_(lattice), cols_(std::move(columns)) {}

WeylElement::WeylElement(lat::PicardLattice lattice, std::vector<lat::Ivec> columns)
    : lattice_(lattice), cols_(std::move(columns)) {
  int n = lattice_.rank();
  if (static_cast<int>(cols_.size()) != n) throw std::invalid_argument("wrong number of columns");
  for (const auto& c : cols_)
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("column has wrong rank");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (lattice_.pair(cols_[i], cols_[j]) != basis_pairing(i, j))
        throw std::invalid_argument("matrix does not preserve the pairing");
  if (apply(lattice_.canonical()) != lattice_.canonical())
    throw std::invalid_argument("matrix does not fix the canonical class");
}

WeylElement WeylElement::identity(const lat::PicardLattice& lattice) {
  std::vector<lat::Ivec> cols;
  for (int i = 0; i < lattice.rank(); ++i) {
    lat::Ivec c(lattice.rank(), 0);
    c[i] = 1;
    cols.push_back(std::move(c));
  }
  return WeylElement(lattice, std::move(cols), unchecked{});
}

WeylElement WeylElement::reflection(const lat::PicardLattice& lattice, const lat::Ivec& root) {
  std::vector<lat::Ivec> cols;
  for (int i = 0; i < lattice.rank(); ++i) {
    lat::Ivec b(lattice.rank(), 0);
    b[i] = 1;
    cols.push_back(lattice.reflect(root, b));
  }
  return WeylElement(lattice, std::move(cols));
}

lat::Ivec WeylElement::apply(const lat::Ivec& x) const {
  if (x.size() != cols_.size()) throw std::invalid_argument("vector has wrong rank");
  lat::Ivec out(cols_.size(), 0);
  for (std::size_t i = 0; i < cols_.size(); ++i)
    if (x[i] != 0) out = lat::add(out, lat::scale(x[i], cols_[i]));
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  std::vector<lat::Ivec> cols;
  cols.reserve(cols_.size());
  for (const auto& c : rhs.cols_) cols.push_back(apply(c));
  return WeylElement(lattice_, std::move(cols), unchecked{});
}

WeylElement WeylElement::inverse() const {
  int n = lattice_.rank();
  auto g = [](int i) { return i == 0 ? 1 : -1; };
  std::vector<lat::Ivec> cols(n, lat::Ivec(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cols[j][i] = g(i) * g(j) * cols_[i][j];
  return WeylElement(lattice_, std::move(cols), unchecked{});
}

bool WeylElement::is_identity() const {
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (std::size_t i = 0; i < cols_.size(); ++i)
      if (cols_[j][i] != (i == j ? 1 : 0)) return false;
  return true;
}

int WeylElement::sign() const {
  int n = lattice_.rank();
  std::vector<lat::Ivec> rows(n, lat::Ivec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = cols_[j][i];
  std::int64_t d = lat::int_det(std::move(rows));
  if (d != 1 && d != -1) throw std::logic_error("group element with determinant != +-1");
  return static_cast<int>(d);
}

WeylElement iota(const lat::PicardLattice& lattice) {
  if (lattice.degree() != 2) throw std::invalid_argument("iota needs degree 2");
  lat::Ivec k = lattice.canonical();
  std::vector<lat::Ivec> cols;
  for (int i = 0; i < lattice.rank(); ++i) {
    lat::Ivec b(lattice.rank(), 0);
    b[i] = 1;
    cols.push_back(lat::sub(lat::scale(lattice.pair(b, k), k), b));
  }
  return WeylElement(lattice, std::move(cols));
}

WeylGroup::WeylGroup(lat::PicardLattice lattice) : lattice_(lattice), roots_(lattice.roots()) {
  for (std::size_t i = 0; i < roots_.size(); ++i) root_index_[roots_[i]] = static_cast<int>(i);
  for (const auto& a : lattice_.simple_roots())
    simple_refl_.push_back(WeylElement::reflection(lattice_, a));
  if (lattice_.degree() >= 2) {
    exc_ = lattice_.exceptional_classes();
    for (std::size_t i = 0; i < exc_.size(); ++i) exc_index_[exc_[i]] = static_cast<int>(i);
  }
  if (lattice_.degree() == 2) {
    for (std::size_t i = 0; i < exc_.size(); ++i) {
      int j = exc_index_.at(lattice_.geiser(exc_[i]));
      if (static_cast<int>(i) < j) pairs_.emplace_back(static_cast<int>(i), j);
    }
  }
}

int WeylGroup::root_index(const lat::Ivec& root) const {
  auto it = root_index_.find(root);
  if (it == root_index_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

const perm::PermGroup& WeylGroup::root_action() const {
  if (!root_group_) {
    std::vector<perm::Permutation> gens;
    for (const auto& w : simple_refl_) gens.push_back(root_permutation(w));
    root_group_.emplace(std::move(gens));
  }
  return *root_group_;
}

std::uint64_t WeylGroup::order() const { return root_action().order(); }

perm::Permutation WeylGroup::root_permutation(const WeylElement& w) const {
  std::vector<int> img(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) img[i] = root_index(w.apply(roots_[i]));
  return perm::Permutation(img);
}

bool WeylGroup::contains(const WeylElement& w) const {
  return root_action().contains(root_permutation(w));
}

std::vector<perm::Permutation> WeylGroup::center_permutations() const {
  int n = static_cast<int>(roots_.size());
  std::vector<perm::Permutation> gens;
  for (const auto& w : simple_refl_) gens.push_back(root_permutation(w));

  // Schreier tree from the first root: the action is transitive, so any
  // permutation commuting with the group is forced by the image of root 0.
  std::vector<perm::Permutation> to(static_cast<std::size_t>(n), perm::Permutation(n));
  std::vector<char> reached(n, 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    int gamma = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      int delta = g(gamma);
      if (!reached[delta]) {
        reached[delta] = 1;
        to[delta] = g * to[gamma];
        queue.push_back(delta);
      }
    }
  }
  for (char r : reached)
    if (!r) throw std::logic_error("root action is not transitive");

  std::vector<perm::Permutation> center;
  for (int beta = 0; beta < n; ++beta) {
    std::vector<int> img(n), seen(n, 0);
    bool ok = true;
    for (int gamma = 0; gamma < n && ok; ++gamma) {
      img[gamma] = to[gamma](beta);
      if (seen[img[gamma]]++) ok = false;
    }
    if (!ok) continue;
    perm::Permutation z(img);
    for (const auto& g : gens)
      if (!(z * g == g * z)) {
        ok = false;
        break;
      }
    if (ok && root_action().contains(z)) center.push_back(z);
  }
  return center;
}

namespace {

struct PackedKey {
  std::array<std::uint64_t, 4> w{};
  bool operator==(const PackedKey& o) const { return w == o.w; }
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t v : k.w) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

PackedKey pack_matrix(const std::vector<int>& m, int k) {
  PackedKey key;
  for (int idx = 0; idx < k * k; ++idx) {
    int v = m[idx] + 4;
    if (v < 0 || v > 8) throw std::logic_error("matrix entry out of packing range");
    key.w[idx / 16] |= static_cast<std::uint64_t>(v) << ((idx % 16) * 4);
  }
  return key;
}

std::vector<int> unpack_matrix(const PackedKey& key, int k) {
  std::vector<int> m(k * k);
  for (int idx = 0; idx < k * k; ++idx)
    m[idx] = static_cast<int>((key.w[idx / 16] >> ((idx % 16) * 4)) & 0xF) - 4;
  return m;
}

}  // namespace

std::uint64_t WeylGroup::closure_order(std::uint64_t max_elements) const {
  auto simple = lattice_.simple_roots();
  int k = static_cast<int>(simple.size());
  if (k + 1 != lattice_.rank()) throw std::invalid_argument("closure needs a root basis (degree <= 6)");

  // reflections in coordinates on the simple roots themselves
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> m(k * k, 0);
    for (int j = 0; j < k; ++j) {
      m[j * k + j] = 1;
      m[i * k + j] += static_cast<int>(lattice_.pair(simple[j], simple[i]));
    }
    gens.push_back(std::move(m));
  }

  std::vector<int> id(k * k, 0);
  for (int i = 0; i < k; ++i) id[i * k + i] = 1;

  std::unordered_set<PackedKey, PackedKeyHash> visited;
  std::deque<PackedKey> queue;
  visited.insert(pack_matrix(id, k));
  queue.push_back(pack_matrix(id, k));
  while (!queue.empty()) {
    std::vector<int> cur = unpack_matrix(queue.front(), k);
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> prod(k * k, 0);
      for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
          int v = g[i * k + l];
          if (v == 0) continue;
          for (int j = 0; j < k; ++j) prod[i * k + j] += v * cur[l * k + j];
        }
      PackedKey key = pack_matrix(prod, k);
      if (visited.insert(key).second) {
        if (visited.size() > max_elements)
          throw budget_error("closure exceeded the element budget");
        queue.push_back(key);
      }
    }
  }
  return visited.size();
}

const std::vector<lat::Ivec>& WeylGroup::exceptional() const {
  if (exc_.empty()) throw std::invalid_argument("exceptional classes need degree >= 2");
  return exc_;
}

int WeylGroup::exceptional_index(const lat::Ivec& e) const {
  auto it = exc_index_.find(e);
  if (it == exc_index_.end()) throw std::invalid_argument("not an exceptional class");
  return it->second;
}

perm::Permutation WeylGroup::exceptional_permutation(const WeylElement& w) const {
  const auto& exc = exceptional();
  std::vector<int> img(exc.size());
  for (std::size_t i = 0; i < exc.size(); ++i) img[i] = exceptional_index(w.apply(exc[i]));
  return perm::Permutation(img);
}

const std::vector<std::pair<int, int>>& WeylGroup::pairs() const {
  if (pairs_.empty()) throw std::invalid_argument("pairs need degree 2");
  return pairs_;
}

perm::Permutation WeylGroup::pair_permutation(const WeylElement& w) const {
  const auto& pr = pairs();
  std::map<std::pair<int, int>, int> where;
  for (std::size_t i = 0; i < pr.size(); ++i) where[pr[i]] = static_cast<int>(i);
  perm::Permutation on_exc = exceptional_permutation(w);
  std::vector<int> img(pr.size());
  for (std::size_t i = 0; i < pr.size(); ++i) {
    int a = on_exc(pr[i].first), b = on_exc(pr[i].second);
    img[i] = where.at({std::min(a, b), std::max(a, b)});
  }
  return perm::Permutation(img);
}

const lat::Mod2Quotient& WeylGroup::quotient() const {
  if (!quotient_) quotient_ = lat::orthogonal_complement_mod2(lattice_);
  return *quotient_;
}

sym::Symplectomorphism WeylGroup::mod2_symplectic(const WeylElement& w) const {
  const auto& q = quotient();
  int k = static_cast<int>(q.simple.size());
  f2::Mat m(k, k);
  for (int j = 0; j < k; ++j) {
    lat::Ivec c = lattice_.decompose_in_simple_roots(w.apply(q.simple[j]));
    for (int i = 0; i < k; ++i) m.set(i, j, c[i] & 1);
  }
  return sym::Symplectomorphism(q.space(), q.push_matrix(m));
}

std::vector<sym::QuadraticForm> WeylGroup::pair_forms() const {
  const auto& pr = pairs();
  const auto& q = quotient();
  auto sp = q.space();
  int k = static_cast<int>(q.simple.size());

  auto form_for = [&](const lat::Ivec& e) {
    f2::Vec values(2 * q.g, 0);
    for (int b = 0; b < 2 * q.g; ++b) {
      lat::Ivec v(lattice_.rank(), 0);
      for (int r = 0; r < k; ++r)
        if (q.section.get(r, b)) v = lat::add(v, q.simple[r]);
      std::int64_t val = lattice_.pair(v, v) / 2 + lattice_.pair(v, e);
      values.set(b, ((val % 2) + 2) % 2 != 0);
    }
    return sym::QuadraticForm::from_values_on_basis(sp, values);
  };

  std::vector<sym::QuadraticForm> out;
  for (auto [i, j] : pr) {
    auto qa = form_for(exc_[i]);
    auto qb = form_for(exc_[j]);
    if (!(qa == qb)) throw std::logic_error("the two classes of a pair give different forms");
    if (!qa.arf()) throw std::logic_error("pair form is not odd");
    out.push_back(qa);
  }
  return out;
}

Frame WeylGroup::orthogonal_frame() const {
  if (lattice_.degree() != 2) throw std::invalid_argument("the orthogonal frame needs degree 2");
  if (frame_) return *frame_;
  int n = static_cast<int>(roots_.size());
  std::vector<int> chosen;
  // depth-first over ascending indices: the first completed tuple is the
  // lexicographically least one
  auto rec = [&](auto&& self, int start) -> bool {
    if (chosen.size() == 7) return true;
    for (int i = start; i < n; ++i) {
      if (n - i < 7 - static_cast<int>(chosen.size())) return false;
      bool ok = true;
      for (int c : chosen)
        if (lattice_.pair(roots_[c], roots_[i]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::logic_error("no orthogonal frame found");
  Frame f;
  f.root_indices = chosen;
  for (int i : chosen) f.roots.push_back(roots_[i]);
  frame_ = f;
  return f;
}

std::vector<WeylElement> WeylGroup::frame_reflections() const {
  std::vector<WeylElement> out;
  for (const auto& r : orthogonal_frame().roots) out.push_back(WeylElement::reflection(lattice_, r));
  return out;
}

std::vector<perm::Permutation> WeylGroup::frame_pair_action() const {
  std::vector<perm::Permutation> out;
  for (const auto& w : frame_reflections()) out.push_back(pair_permutation(w));
  return out;
}

WeylElement WeylGroup::random_element(std::mt19937_64& rng, int words) const {
  WeylElement w = WeylElement::identity(lattice_);
  for (int i = 0; i < words; ++i) w = w * simple_refl_[rng() % simple_refl_.size()];
  return w;
}

}  // namespace e7kit::weyl
