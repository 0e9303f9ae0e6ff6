#pragma once

#include <vector>
#include <string>

#include "e7kit/f2.hpp"
#include "e7kit/perm.hpp"

namespace e7kit::ab2 {

// One orbit of an elementary abelian 2-group action. The quotient acting
// group is F2^r; members are ordered by their label in F2^r, so members[0]
// is the orbit's smallest point and the labels of the generators can be
// read off the character rows (see reconstruct_generator).
struct OrbitReport {
  std::vector<int> members;
  int quotient_rank = 0;
  std::vector<f2::Vec> characters;  // all 2^r - 1 nonzero characters, rows over the generators, sorted
};

struct ActionReport {
  int num_points = 0;
  int num_generators = 0;
  std::vector<perm::Permutation> generators;
  std::vector<OrbitReport> orbits;  // ordered by smallest member
  f2::Mat flattened;                // one row per (orbit, nonzero character)
};

// Validates that the generators are commuting involutions (or identities)
// of a common finite set, then reports the orbit/character structure.
ActionReport analyze_action(const std::vector<perm::Permutation>& generators);

// Rebuilds generator gen_index from the report alone; analyze_action
// followed by reconstruct_generator is the identity on generators.
perm::Permutation reconstruct_generator(const ActionReport& report, int gen_index);

// Conjugacy type of the smallest elementary abelian subgroup of the full
// symmetric group that envelops the action orbitwise. kind is
// "trivial"        when nothing moves,
// "transposition"  when every moved orbit has size 2,
// "regular-klein"  when every moved orbit is a regular Klein orbit of size 4,
// "mixed"          otherwise.
// rank sums the orbit quotient ranks, e.g. 14 for seven regular Klein orbits.
struct EnvelopeInfo {
  std::string kind;
  int rank = 0;
};

EnvelopeInfo envelope(const ActionReport& report);

}  // namespace e7kit::ab2
