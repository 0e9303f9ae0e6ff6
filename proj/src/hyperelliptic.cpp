#include "e7kit/hyperelliptic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "e7kit/errors.hpp"

namespace e7kit::hyp {

HyperellipticModel::HyperellipticModel(int g) : g_(g), from_std_(1, 1), to_std_(1, 1) {
  if (g < 1 || g > 4) throw std::invalid_argument("genus must be 1..4");
  int n = 2 * g;
  f2::Mat gram(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    gram.set(i, i + 1, true);
    gram.set(i + 1, i, true);
  }
  auto split = f2::symplectic_split(gram);
  if (!split.radical.empty() || static_cast<int>(split.e.size()) != g)
    throw std::logic_error("path gram matrix must be nondegenerate");
  from_std_ = f2::Mat(n, n);
  for (int j = 0; j < g; ++j)
    for (int r = 0; r < n; ++r) {
      from_std_.set(r, j, split.e[j].get(r));
      from_std_.set(r, g + j, split.f[j].get(r));
    }
  to_std_ = from_std_.inverse();
}

f2::Vec HyperellipticModel::pair_class_u(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= marked_points() || a == b) throw std::invalid_argument("bad marked point pair");
  int n = 2 * g_;
  f2::Vec c(n, 0);
  // delta_a + delta_b telescopes through u_{a+1}..u_b (1-based u indices);
  // the out-of-basis class u_{2g+1} equals u_1 + u_3 + ... + u_{2g-1}
  // modulo the complement relation.
  for (int i = a + 1; i <= b; ++i) {
    if (i <= n) {
      c.set(i - 1, !c.get(i - 1));
    } else {
      for (int j = 1; j <= n - 1; j += 2) c.set(j - 1, !c.get(j - 1));
    }
  }
  return c;
}

f2::Vec HyperellipticModel::pair_class(int a, int b) const { return to_std_.apply(pair_class_u(a, b)); }

sym::Symplectomorphism HyperellipticModel::to_symplectic(const perm::Permutation& pi) const {
  if (pi.degree() != marked_points()) throw std::invalid_argument("permutation degree mismatch");
  int n = 2 * g_;
  // column j: push the j-th standard basis vector through the subset action
  f2::Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    f2::Vec ucoords = from_std_.apply(f2::Vec::unit(n, j));
    f2::Vec img(n, 0);
    for (int i = 1; i <= n; ++i)
      if (ucoords.get(i - 1)) img = img + pair_class(pi(i - 1), pi(i));
    for (int r = 0; r < n; ++r) m.set(r, j, img.get(r));
  }
  return sym::Symplectomorphism(space(), m);
}

std::uint64_t HyperellipticModel::image_size() const {
  if (g_ > 3) throw budget_error("image enumeration is limited to genus <= 3");
  std::vector<int> points(marked_points());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i);
  std::unordered_set<std::uint64_t> images;
  do {
    images.insert(to_symplectic(perm::Permutation(points)).matrix().pack());
  } while (std::next_permutation(points.begin(), points.end()));
  return images.size();
}

std::vector<perm::Permutation> HyperellipticModel::disjoint_transpositions() const {
  std::vector<perm::Permutation> out;
  for (int i = 0; i + 1 < marked_points(); i += 2)
    out.push_back(perm::Permutation::transposition(marked_points(), i, i + 1));
  return out;
}

std::vector<sym::QuadraticForm> HyperellipticModel::odd_forms() const {
  std::vector<sym::QuadraticForm> out;
  for (const auto& q : sym::enumerate_forms(g_))
    if (q.arf()) out.push_back(q);
  return out;
}

std::vector<perm::Permutation> HyperellipticModel::odd_form_action() const {
  auto odd = odd_forms();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < odd.size(); ++i) index[odd[i].hex()] = static_cast<int>(i);
  std::vector<perm::Permutation> out;
  for (const auto& t : disjoint_transpositions()) {
    auto sigma = to_symplectic(t);
    std::vector<int> img(odd.size());
    for (std::size_t i = 0; i < odd.size(); ++i) img[i] = index.at(sigma.apply(odd[i]).hex());
    out.push_back(perm::Permutation(img));
  }
  return out;
}

}  // namespace e7kit::hyp
