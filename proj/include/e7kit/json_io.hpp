#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "e7kit/abelian2.hpp"
#include "e7kit/invariant.hpp"
#include "e7kit/symplectic.hpp"
#include "e7kit/torus.hpp"
#include "e7kit/weyl.hpp"

// JSON encodings for every value the command-line tools emit. Field order
// is part of the output contract, hence ordered_json throughout.
namespace e7kit::io {

using json = nlohmann::ordered_json;

// Hex packing writes bits most-significant-first: bits[0] is the top bit
// of the first hex digit, and the tail is zero-padded to a nibble boundary.
std::string hex_bits(const std::vector<bool>& bits);
std::vector<bool> bits_from_hex(std::size_t count, const std::string& s);

std::string vec_hex(const f2::Vec& v);
f2::Vec vec_from_hex(int len, const std::string& s);

json row_json(const f2::Vec& v);  // explicit 0/1 array
f2::Vec row_from_json(const json& j);
json mat_json(const f2::Mat& m);
f2::Mat mat_from_json(const json& j);

// {"g": g, "coeffs": hex of the upper triangle, row-major, (0,0) first}
json form_json(const sym::QuadraticForm& q);
sym::QuadraticForm form_from_json(const json& j);

json ivec_json(const lat::Ivec& v);
lat::Ivec ivec_from_json(const json& j);
json root_type_json(const lat::RootType& t);

json perm_json(const perm::Permutation& p);  // 0-based image array
perm::Permutation perm_from_json(const json& j);

json weyl_json(const weyl::WeylElement& w);  // matrix as rows
weyl::WeylElement weyl_from_json(const lat::PicardLattice& lattice, const json& j);

json orbit_json(const ab2::OrbitReport& o);
json report_json(const ab2::ActionReport& r);
ab2::ActionReport report_from_json(const json& j);
json envelope_json(const ab2::EnvelopeInfo& e);

// sorted array of sorted 1-based index arrays; [] is zero, [[]] is one
json poly_json(const inv::SquareFreePoly& p);
inv::SquareFreePoly poly_from_json(int nvars, const json& j);
json table_json(const inv::ModuleTable& t);

json character_json(const torus::Character& chi);  // {"p": ..., "values": [...]}
torus::Character character_from_json(const lat::PicardLattice& lattice, const json& j);
json point_json(const torus::Point& p);
torus::Point point_from_json(const json& j);
json position_json(const torus::PositionReport& r);
torus::PositionReport position_from_json(const json& j);
json configuration_json(const torus::Configuration& c, const torus::PositionReport& r);

json stats_json(const torus::EquivalenceStats& s);
json trial_json(const torus::ConditionedTrial& t);

}  // namespace e7kit::io
