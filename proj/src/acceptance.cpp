#include "e7kit/acceptance.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "e7kit/abelian2.hpp"
#include "e7kit/hyperelliptic.hpp"
#include "e7kit/invariant.hpp"
#include "e7kit/lattice.hpp"
#include "e7kit/symplectic.hpp"
#include "e7kit/torus.hpp"
#include "e7kit/weyl.hpp"

namespace e7kit::acc {

namespace {

using io::json;

std::string basis_key(const sym::AronholdBasis& b) {
  std::string k;
  for (const auto& q : b.forms) k += q.hex() + "|";
  return k;
}

sym::AronholdBasis act(const sym::Symplectomorphism& s, const sym::AronholdBasis& b) {
  sym::AronholdBasis out{b.space, {}};
  for (const auto& q : b.forms) out.forms.push_back(s.apply(q));
  return out;
}

std::vector<f2::Vec> standard_basis(const sym::SymplecticSpace& s) {
  std::vector<f2::Vec> basis;
  for (int i = 0; i < s.g(); ++i) basis.push_back(s.e(i));
  for (int i = 0; i < s.g(); ++i) basis.push_back(s.f(i));
  return basis;
}

perm::Permutation sympl_to_points(const sym::Symplectomorphism& s) {
  int n = (1 << s.space().dim()) - 1;
  std::vector<int> img(n);
  for (std::uint64_t p = 1; p <= static_cast<std::uint64_t>(n); ++p)
    img[p - 1] = static_cast<int>(s.apply(f2::Vec(s.space().dim(), p)).bits() - 1);
  return perm::Permutation(img);
}

std::map<int, int> cycle_type(const perm::Permutation& p) {
  std::map<int, int> type;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = p(j);
      ++len;
    } while (j != i);
    ++type[len];
  }
  return type;
}

const weyl::WeylGroup& e7_group() {
  static weyl::WeylGroup W{lat::PicardLattice(2)};
  return W;
}

CriterionResult form_census() {
  CriterionResult r{1, "form-census", true, "", json::object()};
  json per_genus = json::array();
  for (int g = 1; g <= 3; ++g) {
    auto forms = sym::enumerate_forms(g);
    std::uint64_t even_target = (std::uint64_t{1} << (g - 1)) * ((std::uint64_t{1} << g) + 1);
    std::uint64_t even = 0, odd = 0;
    bool zeros_ok = true;
    for (const auto& q : forms) {
      if (!q.arf()) {
        ++even;
        zeros_ok = zeros_ok && q.zero_count() == even_target;
      } else {
        ++odd;
        zeros_ok = zeros_ok && q.zero_count() == (std::uint64_t{1} << (2 * g - 1)) -
                                                     (std::uint64_t{1} << (g - 1));
      }
    }
    bool ok = forms.size() == std::uint64_t{1} << (2 * g) && even == even_target && zeros_ok;
    r.pass = r.pass && ok;
    per_genus.push_back(json{{"g", g},
                             {"forms", forms.size()},
                             {"even", even},
                             {"odd", odd},
                             {"even_zero_count", even_target},
                             {"zero_counts_verified", zeros_ok}});
  }
  r.certificate["census"] = per_genus;
  r.detail = "even-form counts 3/10/36 with matching zero counts";
  return r;
}

CriterionResult odd_form_count() {
  CriterionResult r{2, "odd-form-count", true, "", json::object()};
  auto forms = sym::enumerate_forms(3);
  int odd = 0;
  for (const auto& q : forms) odd += q.arf();
  r.pass = odd == 28;
  r.detail = "28 odd forms at genus 3; the displayed index value 24 disagrees";
  r.certificate = json{
      {"computed_odd_forms", odd},
      {"displayed_index_formula", "2^g(2^{g-1}-1)"},
      {"displayed_index_value", 24},
      {"note",
       "the displayed exponent formula evaluates to 24 at g=3 while the count is 28 = "
       "2^{g-1}(2^g-1); the rank-28 symmetric group is the one used consistently elsewhere"}};
  return r;
}

CriterionResult aronhold_torsor() {
  CriterionResult r{3, "aronhold-torsor", true, "", json::object()};
  json per_genus = json::array();

  for (int g = 1; g <= 2; ++g) {
    auto bases = sym::all_aronhold_bases(g);
    auto elements = sym::sp_elements(g);
    sym::SymplecticSpace s(g);
    std::set<std::string> all_keys;
    for (const auto& b : bases) all_keys.insert(basis_key(b));
    std::set<std::string> orbit;
    for (const auto& m : elements) orbit.insert(basis_key(act(sym::Symplectomorphism(s, m), bases[0])));
    bool transitive = orbit == all_keys;
    bool free = orbit.size() == elements.size();
    bool counted = bases.size() == sym::sp_order(g);
    r.pass = r.pass && transitive && free && counted;
    per_genus.push_back(json{{"g", g},
                             {"bases", bases.size()},
                             {"group_order", sym::sp_order(g)},
                             {"transitive", transitive},
                             {"free", free}});
  }

  // genus 3: freeness through the equivariant conversion, cardinality by the
  // bijection with ordered symplectic bases
  {
    sym::SymplecticSpace s(3);
    std::mt19937_64 rng(97);
    bool equivariant = true, stabilizer_trivial = true;
    for (int trial = 0; trial < 1000; ++trial) {
      auto m = sym::random_sp_element(s, rng);
      std::vector<f2::Vec> sb;
      for (const auto& v : standard_basis(s)) sb.push_back(m.apply(v));
      auto b = sym::symplectic_to_aronhold(s, sb);
      auto w = sym::random_sp_element(s, rng);
      auto moved = act(w, b);
      auto via_basis = sym::aronhold_to_symplectic(moved);
      for (std::size_t i = 0; i < sb.size(); ++i)
        equivariant = equivariant && via_basis[i] == w.apply(sb[i]);
      if (basis_key(moved) == basis_key(b))
        stabilizer_trivial = stabilizer_trivial && w == sym::Symplectomorphism::identity(s);
    }
    bool counted = sym::sp_order(3) == 1451520ull;
    r.pass = r.pass && equivariant && stabilizer_trivial && counted;
    per_genus.push_back(json{{"g", 3},
                             {"random_trials", 1000},
                             {"conversion_equivariant", equivariant},
                             {"stabilizer_trivial", stabilizer_trivial},
                             {"cardinality_by_bijection", sym::sp_order(3)}});
  }
  r.certificate["torsor"] = per_genus;
  r.detail = "free transitive action: 6 bases (g=1), 720 (g=2), 1451520 by bijection (g=3)";
  return r;
}

CriterionResult conversion_soundness() {
  CriterionResult r{4, "conversion-soundness", true, "", json::object()};
  json per_genus = json::array();
  for (int g = 1; g <= 2; ++g) {
    sym::SymplecticSpace s(g);
    bool round_trip = true, sound = true;
    auto bases = sym::all_aronhold_bases(g);
    for (const auto& b : bases) {
      auto sb = sym::aronhold_to_symplectic(b);  // validates the pairing
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
          sound = sound && s.pairing(sb[i], sb[g + j]) == (i == j);
          sound = sound && !s.pairing(sb[i], sb[j]) && !s.pairing(sb[g + i], sb[g + j]);
        }
      auto back = sym::symplectic_to_aronhold(s, sb);
      round_trip = round_trip && basis_key(back) == basis_key(b);
    }
    // opposite direction, from every group element's basis
    for (const auto& m : sym::sp_elements(g)) {
      sym::Symplectomorphism w(s, m);
      std::vector<f2::Vec> sb;
      for (const auto& v : standard_basis(s)) sb.push_back(w.apply(v));
      auto b = sym::symplectic_to_aronhold(s, sb);
      round_trip = round_trip && sym::aronhold_to_symplectic(b) == sb;
    }
    r.pass = r.pass && round_trip && sound;
    per_genus.push_back(json{{"g", g},
                             {"checked", bases.size()},
                             {"exhaustive", true},
                             {"round_trip", round_trip},
                             {"symplectic_output", sound}});
  }
  {
    sym::SymplecticSpace s(3);
    std::mt19937_64 rng(101);
    bool round_trip = true;
    for (int trial = 0; trial < 1000; ++trial) {
      auto w = sym::random_sp_element(s, rng);
      std::vector<f2::Vec> sb;
      for (const auto& v : standard_basis(s)) sb.push_back(w.apply(v));
      auto b = sym::symplectic_to_aronhold(s, sb);
      round_trip = round_trip && sym::aronhold_to_symplectic(b) == sb;
    }
    r.pass = r.pass && round_trip;
    per_genus.push_back(json{{"g", 3}, {"checked", 1000}, {"exhaustive", false},
                             {"round_trip", round_trip}});
  }
  r.certificate["conversion"] = per_genus;
  r.detail = "conversions are mutually inverse and always land on symplectic bases";
  return r;
}

CriterionResult lattice_census() {
  CriterionResult r{5, "lattice-census", true, "", json::object()};
  lat::PicardLattice L(2);
  auto roots = L.roots();
  auto blind = L.roots_blind();
  auto exc = L.exceptional_classes();
  auto exc_blind = L.exceptional_blind();

  bool counts = roots.size() == 126 && exc.size() == 56;
  bool agree = roots == blind && exc == exc_blind;

  std::set<lat::Ivec> root_set(roots.begin(), roots.end());
  bool closed = true;
  for (const auto& alpha : L.simple_roots())
    for (const auto& beta : roots) closed = closed && root_set.count(L.reflect(alpha, beta));

  std::set<std::set<lat::Ivec>> pairs;
  bool involutive = true;
  for (const auto& e : exc) {
    auto ge = L.geiser(e);
    involutive = involutive && L.geiser(ge) == e && ge != e;
    pairs.insert({e, ge});
  }

  r.pass = counts && agree && closed && involutive && pairs.size() == 28;
  r.detail = "126 roots, 56 exceptional classes, 28 pairs; blind search agrees";
  r.certificate = json{{"roots", roots.size()},
                       {"exceptional", exc.size()},
                       {"pairs", pairs.size()},
                       {"blind_search_agrees", agree},
                       {"closed_under_simple_reflections", closed}};
  return r;
}

CriterionResult group_structure() {
  CriterionResult r{6, "group-structure", true, "", json::object()};
  const auto& W = e7_group();
  const auto& L = W.lattice();
  auto io_ta = weyl::iota(L);

  bool order_ok = W.order() == 2903040ull;

  std::vector<perm::Permutation> mod2_gens;
  for (const auto& s : W.simple_reflections()) mod2_gens.push_back(sympl_to_points(W.mod2_symplectic(s)));
  std::uint64_t image_order = perm::PermGroup(mod2_gens).order();
  bool image_ok = image_order == 1451520ull && image_order == sym::sp_order(3);
  bool kernel_ok = W.order() == 2 * image_order &&
                   W.mod2_symplectic(io_ta) ==
                       sym::Symplectomorphism::identity(sym::SymplecticSpace(3)) &&
                   !io_ta.is_identity() && (io_ta * io_ta).is_identity();

  auto center = W.center_permutations();
  bool center_ok = center.size() == 2;
  bool central = false;
  for (const auto& c : center) central = central || c == W.root_permutation(io_ta);

  bool split_ok = io_ta.sign() == -1;  // the order-2 central factor misses the kernel of sign

  r.pass = order_ok && image_ok && kernel_ok && center_ok && central && split_ok;
  r.detail = "order 2903040 = 2 * 1451520 with central involution kernel";
  r.certificate = json{{"order", W.order()},
                       {"mod2_image_order", image_order},
                       {"kernel", json::array({"identity", "central involution"})},
                       {"central_involution_in_center", central},
                       {"center_size", center.size()},
                       {"central_involution_sign", io_ta.sign()}};
  return r;
}

CriterionResult pair_action() {
  CriterionResult r{7, "pair-action", true, "", json::object()};
  const auto& W = e7_group();
  const auto& L = W.lattice();
  auto io_ta = weyl::iota(L);

  std::vector<perm::Permutation> pair_gens;
  for (const auto& s : W.simple_reflections()) pair_gens.push_back(W.pair_permutation(s));
  std::uint64_t image_order = perm::PermGroup(pair_gens).order();
  bool kernel_ok = image_order == W.order() / 2 &&
                   W.pair_permutation(io_ta) == perm::Permutation(28);

  bool cycles_ok = true;
  for (const auto& root : W.roots()) {
    auto refl = weyl::WeylElement::reflection(L, root);
    auto type = cycle_type(W.pair_permutation(refl));
    cycles_ok = cycles_ok && type == std::map<int, int>{{1, 16}, {2, 6}};
  }

  // the same action through the odd-form identification
  auto forms = W.pair_forms();
  std::map<std::string, int> form_index;
  for (std::size_t i = 0; i < forms.size(); ++i) form_index[forms[i].hex()] = static_cast<int>(i);
  std::mt19937_64 rng(7);
  bool identified = true;
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = W.random_element(rng);
    auto via_pairs = W.pair_permutation(w);
    auto s = W.mod2_symplectic(w);
    for (int i = 0; i < 28; ++i)
      identified = identified && form_index.at(s.apply(forms[i]).hex()) == via_pairs(i);
  }

  r.pass = kernel_ok && cycles_ok && identified;
  r.detail = "kernel {id, central involution}; reflections are 1^16 2^6; identifications agree";
  r.certificate = json{{"image_order", image_order},
                       {"reflection_cycle_type", "1^16 2^6"},
                       {"reflections_checked", 126},
                       {"identification_trials", 1000},
                       {"identification_agrees", identified}};
  return r;
}

CriterionResult frame_report() {
  CriterionResult r{8, "frame-report", true, "", json::object()};
  const auto& W = e7_group();
  const auto& L = W.lattice();

  auto frame = W.orthogonal_frame();
  weyl::WeylGroup W2{lat::PicardLattice(2)};
  bool deterministic = frame.roots == W2.orthogonal_frame().roots;

  bool orthogonal = frame.roots.size() == 7;
  for (std::size_t i = 0; i < frame.roots.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < frame.roots.size(); ++j)
      orthogonal = orthogonal && L.pair(frame.roots[i], frame.roots[j]) == 0;

  auto product = weyl::WeylElement::identity(L);
  for (const auto& refl : W.frame_reflections()) product = product * refl;
  bool central = product == weyl::iota(L);

  auto report = ab2::analyze_action(W.frame_pair_action());
  bool reconstructed = true;
  for (int i = 0; i < report.num_generators; ++i)
    reconstructed = reconstructed && ab2::reconstruct_generator(report, i) == report.generators[i];

  auto env = ab2::envelope(report);
  bool envelope_ok = env.kind == "regular-klein" && env.rank == 14;

  r.pass = deterministic && orthogonal && central && reconstructed && envelope_ok;
  r.detail = "deterministic orthogonal frame; envelope regular-klein of rank 14";
  json roots_json = json::array();
  for (const auto& root : frame.roots) roots_json.push_back(io::ivec_json(root));
  r.certificate = json{
      {"frame", roots_json},
      {"product_is_central_involution", central},
      {"generators_reconstructed", reconstructed},
      {"envelope", io::envelope_json(env)},
      {"recorded_phrasing", "generated by 14 pairwise disjoint transpositions"},
      {"finding",
       "the image is elementary abelian of rank 14 but its orbits are seven regular Klein "
       "four-point orbits, not transposition pairs: a Klein orbit realizes two distinct "
       "pairings of its four points, which no group generated by disjoint transpositions "
       "can do"},
      {"report", io::report_json(report)}};
  return r;
}

CriterionResult symmetric_class_pieces() {
  CriterionResult r{9, "symmetric-class-pieces", true, "", json::object()};

  json small = json::array();
  for (int g = 1; g <= 2; ++g) {
    hyp::HyperellipticModel model(g);
    auto report = ab2::analyze_action(model.odd_form_action());
    bool sizes_ok = true;
    for (const auto& o : report.orbits) sizes_ok = sizes_ok && o.members.size() <= 2;
    std::vector<inv::SquareFreePoly> rows;
    for (int i = 0; i < report.flattened.rows(); ++i)
      rows.push_back(inv::SquareFreePoly::linear(report.flattened.row(i)));
    bool equal = true;
    for (int d = 0; d <= report.num_generators + 1; ++d)
      equal = equal && inv::sw_piece(report, d) ==
                           inv::elementary_symmetric(report.num_generators, rows, d);
    r.pass = r.pass && sizes_ok && equal;
    small.push_back(json{{"g", g},
                         {"orbit_sizes_at_most_2", sizes_ok},
                         {"piecewise_equal_to_sigma", equal}});
  }

  const auto& W = e7_group();
  auto frame_report = ab2::analyze_action(W.frame_pair_action());
  json pieces = json::array();
  for (int d = 1; d <= 7; ++d) {
    auto piece = inv::sw_piece(frame_report, d);
    pieces.push_back(json{{"degree", d}, {"value", io::poly_json(piece)}});
    if (d == 1) r.pass = r.pass && piece.is_zero();
  }

  r.detail = "size-2 reports match sigma exactly; frame degree-1 piece vanishes";
  r.certificate = json{{"small_genus", small}, {"frame_pieces", pieces}};
  return r;
}

CriterionResult hyperelliptic_maps() {
  CriterionResult r{10, "hyperelliptic-maps", true, "", json::object()};
  json maps = json::array();
  std::uint64_t factorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  for (int g = 1; g <= 3; ++g) {
    hyp::HyperellipticModel model(g);
    std::uint64_t image = model.image_size();
    std::uint64_t domain = factorial[2 * g + 2];
    std::uint64_t kernel = domain / image;
    bool ok = image == (g == 1 ? 6ull : g == 2 ? 720ull : 40320ull) &&
              (g == 1 ? kernel == 4 && image == sym::sp_order(1)
                      : g == 2 ? kernel == 1 && image == sym::sp_order(2)
                               : kernel == 1);
    r.pass = r.pass && ok;
    maps.push_back(json{{"g", g},
                        {"domain_order", domain},
                        {"image_order", image},
                        {"kernel_order", kernel}});
  }
  r.detail = "kernel 4 at g=1, bijective 720 = 720 at g=2, injective at g=3";
  r.certificate = json{
      {"maps", maps},
      {"recorded_line", "B Sp4(2) = B S4"},
      {"computed_sp4_order", sym::sp_order(2)},
      {"note",
       "the rank-4 symplectic group over F2 has order 720, the order of the symmetric group "
       "on six letters; the recorded line names the symmetric group on four"}};
  return r;
}

CriterionResult torus_equivalence() {
  CriterionResult r{11, "torus-equivalence", true, "", json::object()};
  lat::PicardLattice L(2);
  torus::Fp f(101);

  auto stats = torus::equivalence_experiment(L, f, 20260816ull, 200);
  bool agree = stats.agreements == stats.trials && stats.trials == 200;

  json trials = json::array();
  bool conditioned_ok = true;
  for (const auto& root : {lat::Ivec{0, 1, -1, 0, 0, 0, 0, 0}, lat::Ivec{1, -1, -1, -1, 0, 0, 0, 0},
                           lat::Ivec{2, -1, -1, -1, -1, -1, -1, 0}}) {
    auto trial = torus::conditioned_trial(L, f, 31337ull, root);
    conditioned_ok = conditioned_ok && trial.match;
    trials.push_back(io::trial_json(trial));
  }

  r.pass = agree && conditioned_ok;
  r.detail = "200/200 divisor/general-position agreement; conditioned failures as predicted";
  r.certificate = json{{"prime", 101},
                       {"seed", 20260816ull},
                       {"experiment", io::stats_json(stats)},
                       {"conditioned_seed", 31337ull},
                       {"conditioned_trials", trials}};
  return r;
}

CriterionResult metadata_tables() {
  CriterionResult r{12, "metadata-tables", true, "", json::object()};
  auto sp6 = inv::sp6_module_table();
  auto we7 = inv::we7_module_table();
  bool sp6_ok = sp6.degrees == std::vector<int>{0, 2, 3, 4, 6} && sp6.labels.size() == 5;
  bool we7_ok = we7.degrees == std::vector<int>{0, 1, 2, 3, 3, 4, 4, 5, 6, 7} &&
                we7.labels.size() == 10;
  r.pass = sp6_ok && we7_ok;
  r.detail = "5 generators in degrees 0,2,3,4,6 and 10 generators in degrees 0..7";
  r.certificate = json{{"sp6", io::table_json(sp6)},
                       {"we7", io::table_json(we7)},
                       {"recorded_phrasing", "free module of rank four"},
                       {"generators_listed", 5}};
  return r;
}

}  // namespace

CriterionResult criterion(int number) {
  switch (number) {
    case 1: return form_census();
    case 2: return odd_form_count();
    case 3: return aronhold_torsor();
    case 4: return conversion_soundness();
    case 5: return lattice_census();
    case 6: return group_structure();
    case 7: return pair_action();
    case 8: return frame_report();
    case 9: return symmetric_class_pieces();
    case 10: return hyperelliptic_maps();
    case 11: return torus_equivalence();
    case 12: return metadata_tables();
    default: throw std::invalid_argument("criterion: number must be 1..12");
  }
}

std::vector<CriterionResult> run_all(bool fault_inject) {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= 12; ++n) out.push_back(criterion(n));
  if (fault_inject) {
    out[0].pass = false;
    out[0].detail = "injected fault (test hook)";
  }
  return out;
}

}  // namespace e7kit::acc
