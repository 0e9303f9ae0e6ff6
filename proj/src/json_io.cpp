#include "e7kit/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7kit::io {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("bits_from_hex: bad digit");
}

}  // namespace

std::string hex_bits(const std::vector<bool>& bits) {
  std::string out = "0x";
  if (bits.empty()) return out + "0";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (i + k < bits.size() && bits[i + k]) nibble |= 8 >> k;
    out += "0123456789abcdef"[nibble];
  }
  return out;
}

std::vector<bool> bits_from_hex(std::size_t count, const std::string& s) {
  if (s.size() < 2 || s[0] != '0' || s[1] != 'x')
    throw std::invalid_argument("bits_from_hex: missing 0x prefix");
  std::string body = s.substr(2);
  if (count == 0) {
    if (body != "0") throw std::invalid_argument("bits_from_hex: length mismatch");
    return {};
  }
  if (body.size() != (count + 3) / 4)
    throw std::invalid_argument("bits_from_hex: length mismatch");
  std::vector<bool> bits(count);
  for (std::size_t i = 0; i < count; ++i)
    bits[i] = hex_digit(body[i / 4]) >> (3 - i % 4) & 1;
  for (std::size_t i = count; i < 4 * body.size(); ++i)
    if (hex_digit(body[i / 4]) >> (3 - i % 4) & 1)
      throw std::invalid_argument("bits_from_hex: nonzero padding");
  return bits;
}

std::string vec_hex(const f2::Vec& v) {
  std::vector<bool> bits(v.size());
  for (int i = 0; i < v.size(); ++i) bits[i] = v.get(i);
  return hex_bits(bits);
}

f2::Vec vec_from_hex(int len, const std::string& s) {
  auto bits = bits_from_hex(static_cast<std::size_t>(len), s);
  f2::Vec v = f2::Vec::zero(len);
  for (int i = 0; i < len; ++i)
    if (bits[i]) v = v + f2::Vec::unit(len, i);
  return v;
}

json row_json(const f2::Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v.get(i) ? 1 : 0);
  return out;
}

f2::Vec row_from_json(const json& j) {
  f2::Vec v = f2::Vec::zero(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) {
    int b = j.at(i).get<int>();
    if (b != 0 && b != 1) throw std::invalid_argument("row_from_json: entries must be 0 or 1");
    if (b) v = v + f2::Vec::unit(v.size(), i);
  }
  return v;
}

json mat_json(const f2::Mat& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(row_json(m.row(r)));
  return out;
}

f2::Mat mat_from_json(const json& j) {
  std::vector<f2::Vec> rows;
  for (const auto& row : j) rows.push_back(row_from_json(row));
  if (rows.empty()) throw std::invalid_argument("mat_from_json: empty matrix");
  f2::Mat m(static_cast<int>(rows.size()), rows[0].size());
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("mat_from_json: ragged rows");
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, rows[r].get(c));
  }
  return m;
}

json form_json(const sym::QuadraticForm& q) {
  int dim = q.space().dim();
  f2::Mat upper = q.coeffs();
  std::vector<bool> bits;
  bits.reserve(dim * (dim + 1) / 2);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) bits.push_back(upper.get(i, j));
  return json{{"g", q.space().g()}, {"coeffs", hex_bits(bits)}};
}

sym::QuadraticForm form_from_json(const json& j) {
  sym::SymplecticSpace s(j.at("g").get<int>());
  int dim = s.dim();
  auto bits = bits_from_hex(static_cast<std::size_t>(dim) * (dim + 1) / 2,
                            j.at("coeffs").get<std::string>());
  f2::Mat upper(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i)
    for (int c = i; c < dim; ++c) upper.set(i, c, bits[k++]);
  return sym::QuadraticForm::from_coeffs(s, upper);
}

json ivec_json(const lat::Ivec& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

lat::Ivec ivec_from_json(const json& j) {
  lat::Ivec v;
  for (const auto& x : j) v.push_back(x.get<std::int64_t>());
  return v;
}

json root_type_json(const lat::RootType& t) {
  return json{{"tag", t.tag}, {"indices", t.indices}};
}

json perm_json(const perm::Permutation& p) {
  return json(p.images());
}

perm::Permutation perm_from_json(const json& j) {
  return perm::Permutation(j.get<std::vector<int>>());
}

json weyl_json(const weyl::WeylElement& w) {
  int n = w.lattice().rank();
  json out = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(w.columns()[c][r]);
    out.push_back(row);
  }
  return out;
}

weyl::WeylElement weyl_from_json(const lat::PicardLattice& lattice, const json& j) {
  int n = lattice.rank();
  if (static_cast<int>(j.size()) != n) throw std::invalid_argument("weyl_from_json: row count");
  std::vector<lat::Ivec> cols(n, lat::Ivec(n, 0));
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(j.at(r).size()) != n)
      throw std::invalid_argument("weyl_from_json: column count");
    for (int c = 0; c < n; ++c) cols[c][r] = j.at(r).at(c).get<std::int64_t>();
  }
  return weyl::WeylElement(lattice, cols);
}

json orbit_json(const ab2::OrbitReport& o) {
  json chars = json::array();
  for (const auto& chi : o.characters) chars.push_back(row_json(chi));
  return json{{"members", o.members}, {"quotient_rank", o.quotient_rank}, {"characters", chars}};
}

json report_json(const ab2::ActionReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(perm_json(g));
  json orbits = json::array();
  for (const auto& o : r.orbits) orbits.push_back(orbit_json(o));
  return json{{"num_points", r.num_points},
              {"num_generators", r.num_generators},
              {"generators", gens},
              {"orbits", orbits},
              {"flattened_matrix", mat_json(r.flattened)}};
}

ab2::ActionReport report_from_json(const json& j) {
  std::vector<perm::Permutation> gens;
  for (const auto& g : j.at("generators")) gens.push_back(perm_from_json(g));
  auto rebuilt = ab2::analyze_action(gens);
  if (rebuilt.num_points != j.at("num_points").get<int>() ||
      report_json(rebuilt) != json(j))
    throw std::invalid_argument("report_from_json: fields inconsistent with generators");
  return rebuilt;
}

json envelope_json(const ab2::EnvelopeInfo& e) {
  return json{{"kind", e.kind}, {"rank", e.rank}};
}

json poly_json(const inv::SquareFreePoly& p) {
  std::vector<std::vector<int>> terms;
  for (std::uint32_t t : p.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < p.nvars(); ++i)
      if (t >> i & 1) idx.push_back(i + 1);
    terms.push_back(std::move(idx));
  }
  std::sort(terms.begin(), terms.end());
  return json(terms);
}

inv::SquareFreePoly poly_from_json(int nvars, const json& j) {
  std::vector<std::uint32_t> terms;
  for (const auto& term : j) {
    std::uint32_t mask = 0;
    for (const auto& idx : term) {
      int i = idx.get<int>();
      if (i < 1 || i > nvars) throw std::invalid_argument("poly_from_json: index out of range");
      mask |= std::uint32_t{1} << (i - 1);
    }
    terms.push_back(mask);
  }
  return inv::SquareFreePoly::from_terms(nvars, std::move(terms));
}

json table_json(const inv::ModuleTable& t) {
  json gens = json::array();
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    bool formal = t.labels[i].find("f3") != std::string::npos;
    gens.push_back(json{{"label", t.labels[i]},
                        {"degree", t.degrees[i]},
                        {"computable", !formal}});
  }
  return json{{"name", t.name}, {"generators", gens}, {"note", t.note}};
}

json character_json(const torus::Character& chi) {
  return json{{"p", chi.field().p()}, {"values", chi.simple_values()}};
}

torus::Character character_from_json(const lat::PicardLattice& lattice, const json& j) {
  torus::Fp f(j.at("p").get<std::int64_t>());
  return torus::Character(lattice, f, j.at("values").get<std::vector<std::int64_t>>());
}

json point_json(const torus::Point& p) {
  return json::array({p.x, p.y, p.z});
}

torus::Point point_from_json(const json& j) {
  if (j.size() != 3) throw std::invalid_argument("point_from_json: need 3 coordinates");
  return torus::Point{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(),
                      j.at(2).get<std::int64_t>()};
}

json position_json(const torus::PositionReport& r) {
  return json{{"pass", r.ok()},
              {"coincident", r.coincident},
              {"collinear_triples", r.collinear_triples},
              {"conic_sextuples", r.conic_sextuples}};
}

torus::PositionReport position_from_json(const json& j) {
  torus::PositionReport r;
  r.coincident = j.at("coincident").get<std::vector<std::array<int, 2>>>();
  r.collinear_triples = j.at("collinear_triples").get<std::vector<std::array<int, 3>>>();
  r.conic_sextuples = j.at("conic_sextuples").get<std::vector<std::array<int, 6>>>();
  if (j.at("pass").get<bool>() != r.ok())
    throw std::invalid_argument("position_from_json: pass flag inconsistent");
  return r;
}

json configuration_json(const torus::Configuration& c, const torus::PositionReport& r) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(point_json(p));
  return json{{"points", pts}, {"parameters", c.t}, {"certificate", position_json(r)}};
}

json stats_json(const torus::EquivalenceStats& s) {
  return json{{"trials", s.trials}, {"divisor_hits", s.divisor_hits}, {"agreements", s.agreements}};
}

json trial_json(const torus::ConditionedTrial& t) {
  return json{{"root", ivec_json(t.root)},
              {"type", t.type},
              {"predicted", position_json(t.predicted)},
              {"actual", position_json(t.actual)},
              {"match", t.match},
              {"resamples", t.resamples}};
}

}  // namespace e7kit::io
