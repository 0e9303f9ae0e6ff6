#include "e7kit/abelian2.hpp"

#include <algorithm>
#include <stdexcept>

#include "e7kit/errors.hpp"

namespace e7kit::ab2 {

namespace {

// greedy: the first independent rows of the sorted character list
std::vector<f2::Vec> character_basis(const std::vector<f2::Vec>& characters, int rank) {
  std::vector<f2::Vec> basis;
  for (const auto& c : characters) {
    std::vector<f2::Vec> trial = basis;
    trial.push_back(c);
    if (static_cast<int>(f2::span_rank(trial)) > static_cast<int>(basis.size())) basis.push_back(c);
    if (static_cast<int>(basis.size()) == rank) break;
  }
  if (static_cast<int>(basis.size()) != rank) throw std::logic_error("character list does not span");
  return basis;
}

}  // namespace

ActionReport analyze_action(const std::vector<perm::Permutation>& generators) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  int n = generators[0].degree();
  int k = static_cast<int>(generators.size());
  if (k > 12) throw budget_error("too many generators for the 2^k element scan");
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("generators act on different sets");
    if (!(g * g).is_identity()) throw std::invalid_argument("generator is not an involution");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!(generators[i] * generators[j] == generators[j] * generators[i]))
        throw std::invalid_argument("generators do not commute");

  // every element of F2^k as a permutation
  std::vector<perm::Permutation> elt(1u << k, perm::Permutation(n));
  for (std::uint32_t mask = 1; mask < elt.size(); ++mask) {
    std::uint32_t low = mask & (mask - 1);
    int bit = __builtin_ctz(mask);
    elt[mask] = generators[bit] * elt[low];
  }

  ActionReport report;
  report.num_points = n;
  report.num_generators = k;
  report.generators = generators;

  std::vector<char> seen(n, 0);
  std::vector<f2::Vec> flat_rows;
  for (int base = 0; base < n; ++base) {
    if (seen[base]) continue;

    std::vector<f2::Vec> stab;
    for (std::uint32_t mask = 0; mask < elt.size(); ++mask)
      if (elt[mask](base) == base) stab.push_back(f2::Vec(k, mask));
    int rank = k - static_cast<int>(f2::span_rank(stab));

    OrbitReport orbit;
    orbit.quotient_rank = rank;
    for (std::uint32_t phi = 1; phi < (1u << k); ++phi) {
      bool kills = true;
      for (const auto& s : stab)
        if (f2::Vec(k, phi).dot(s)) {
          kills = false;
          break;
        }
      if (kills) orbit.characters.push_back(f2::Vec(k, phi));
    }
    std::sort(orbit.characters.begin(), orbit.characters.end());
    if (static_cast<int>(orbit.characters.size()) != (1 << rank) - 1)
      throw std::logic_error("character count does not match the quotient rank");

    auto basis = character_basis(orbit.characters, rank);
    orbit.members.assign(1u << rank, -1);
    for (std::uint32_t mask = 0; mask < elt.size(); ++mask) {
      int pt = elt[mask](base);
      std::uint32_t label = 0;
      for (int b = 0; b < rank; ++b)
        if (basis[b].dot(f2::Vec(k, mask))) label |= 1u << b;
      if (orbit.members[label] == -1)
        orbit.members[label] = pt;
      else if (orbit.members[label] != pt)
        throw std::logic_error("orbit labels are inconsistent");
    }
    for (int pt : orbit.members) {
      if (pt == -1) throw std::logic_error("orbit label not reached");
      seen[pt] = 1;
    }
    // point stabilizers of an abelian transitive action fix the whole orbit
    for (const auto& s : stab) {
      std::uint32_t mask = static_cast<std::uint32_t>(s.bits());
      for (int pt : orbit.members)
        if (elt[mask](pt) != pt) throw std::logic_error("stabilizer moves an orbit point");
    }

    for (const auto& c : orbit.characters) flat_rows.push_back(c);
    report.orbits.push_back(std::move(orbit));
  }

  report.flattened = f2::Mat(static_cast<int>(flat_rows.size()), k);
  for (std::size_t r = 0; r < flat_rows.size(); ++r)
    report.flattened.set_row(static_cast<int>(r), flat_rows[r]);
  return report;
}

perm::Permutation reconstruct_generator(const ActionReport& report, int gen_index) {
  if (gen_index < 0 || gen_index >= report.num_generators)
    throw std::invalid_argument("generator index out of range");
  std::vector<int> img(report.num_points);
  for (int i = 0; i < report.num_points; ++i) img[i] = i;
  for (const auto& orbit : report.orbits) {
    auto basis = character_basis(orbit.characters, orbit.quotient_rank);
    std::uint32_t delta = 0;
    for (int b = 0; b < orbit.quotient_rank; ++b)
      if (basis[b].get(gen_index)) delta |= 1u << b;
    for (std::uint32_t t = 0; t < orbit.members.size(); ++t)
      img[orbit.members[t]] = orbit.members[t ^ delta];
  }
  return perm::Permutation(img);
}

EnvelopeInfo envelope(const ActionReport& report) {
  EnvelopeInfo info;
  bool any_moved = false, all_pairs = true, all_klein = true;
  for (const auto& orbit : report.orbits) {
    if (orbit.members.size() == 1) continue;
    any_moved = true;
    info.rank += orbit.quotient_rank;
    if (orbit.members.size() != 2) all_pairs = false;
    if (orbit.members.size() != 4 || orbit.quotient_rank != 2) all_klein = false;
  }
  if (!any_moved)
    info.kind = "trivial";
  else if (all_pairs)
    info.kind = "transposition";
  else if (all_klein)
    info.kind = "regular-klein";
  else
    info.kind = "mixed";
  return info;
}

}  // namespace e7kit::ab2
