#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "e7kit/acceptance.hpp"
#include "e7kit/errors.hpp"
#include "e7kit/hyperelliptic.hpp"
#include "e7kit/json_io.hpp"

using e7kit::io::json;
namespace sym = e7kit::sym;
namespace lat = e7kit::lat;
namespace ab2 = e7kit::ab2;
namespace hyp = e7kit::hyp;
namespace inv = e7kit::inv;
namespace weyl = e7kit::weyl;
namespace torus = e7kit::torus;
namespace acc = e7kit::acc;
namespace io = e7kit::io;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Output {
  bool as_json = false;
  std::string out_path;
};

std::string timestamp() {
  std::time_t tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

json frame_provenance() {
  weyl::WeylGroup W{lat::PicardLattice(2)};
  json roots = json::array();
  for (const auto& r : W.orthogonal_frame().roots) roots.push_back(io::ivec_json(r));
  return roots;
}

json envelope(const std::string& command, json results, bool pass, bool with_frame) {
  json prov{{"frame", with_frame ? frame_provenance() : json(nullptr)},
            {"identification",
             "odd form attached to an exceptional pair via x -> x^2/2 + x.e on the mod-2 "
             "quotient"},
            {"coefficient_mode", "F2 with squares reduced to zero"}};
  return json{{"artifact_version", kVersion}, {"command", command},
              {"timestamp", timestamp()},    {"results", std::move(results)},
              {"provenance", prov},          {"pass", pass}};
}

void human_lines(const json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      human_lines(value, name);
    } else if (value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array())) {
      std::printf("%-32s %zu entries\n", name.c_str(), value.size());
    } else {
      std::printf("%-32s %s\n", name.c_str(), value.dump().c_str());
    }
  }
}

// every subcommand funnels through here; exit code 0/1 per the pass flag
int emit(const Output& o, const std::string& command, json results, bool pass,
         bool with_frame = false) {
  json cert = envelope(command, std::move(results), pass, with_frame);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw std::invalid_argument("cannot open output path " + o.out_path);
    f << cert.dump(2) << "\n";
  }
  if (o.as_json) {
    std::printf("%s\n", cert.dump(2).c_str());
  } else {
    human_lines(cert["results"], "");
    std::printf("%s\n", pass ? "pass" : "fail");
  }
  return pass ? 0 : 1;
}

std::uint64_t budget_value(std::uint64_t flag_value) {
  if (flag_value) return flag_value;
  if (const char* env = std::getenv("E7_BUDGET")) return std::strtoull(env, nullptr, 10);
  return 4000000;
}

int run_sympl_enum(const Output& o, int g) {
  auto forms = sym::enumerate_forms(g);
  int odd = 0;
  for (const auto& q : forms) odd += q.arf();
  json results{{"g", g},
               {"forms", forms.size()},
               {"odd", odd},
               {"even", forms.size() - odd}};
  return emit(o, "sympl enum", results, true);
}

int run_sympl_aronhold(const Output& o, int g, bool verify) {
  json results{{"g", g}, {"epsilon", sym::arf_epsilon(g) ? 1 : 0}};
  {
    sym::SymplecticSpace s(g);
    std::vector<e7kit::f2::Vec> sb;
    for (int i = 0; i < g; ++i) sb.push_back(s.e(i));
    for (int i = 0; i < g; ++i) sb.push_back(s.f(i));
    auto canonical = sym::symplectic_to_aronhold(s, sb);
    json basis = json::array();
    for (const auto& q : canonical.forms) basis.push_back(io::form_json(q));
    results["basis"] = basis;
    json conv = json::array();
    for (const auto& v : sym::aronhold_to_symplectic(canonical))
      conv.push_back(io::vec_hex(v));
    results["symplectic_basis"] = conv;
  }
  bool pass = true;
  if (verify) {
    if (g <= 2) {
      auto bases = sym::all_aronhold_bases(g);
      bool all_valid = true, round_trip = true;
      for (const auto& b : bases) {
        all_valid = all_valid && sym::is_aronhold(b);
        auto sb = sym::aronhold_to_symplectic(b);
        auto back = sym::symplectic_to_aronhold(sym::SymplecticSpace(g), sb);
        for (std::size_t i = 0; i < b.forms.size(); ++i)
          round_trip = round_trip && back.forms[i] == b.forms[i];
      }
      pass = all_valid && round_trip && bases.size() == sym::sp_order(g);
      results["bases"] = bases.size();
      results["all_valid"] = all_valid;
      results["round_trip"] = round_trip;
    } else {
      sym::SymplecticSpace s(g);
      std::mt19937_64 rng(1);
      bool round_trip = true;
      for (int trial = 0; trial < 200; ++trial) {
        auto w = sym::random_sp_element(s, rng);
        std::vector<e7kit::f2::Vec> sb;
        for (int i = 0; i < s.g(); ++i) sb.push_back(w.apply(s.e(i)));
        for (int i = 0; i < s.g(); ++i) sb.push_back(w.apply(s.f(i)));
        auto b = sym::symplectic_to_aronhold(s, sb);
        round_trip = round_trip && sym::is_aronhold(b) && sym::aronhold_to_symplectic(b) == sb;
      }
      pass = round_trip;
      results["random_trials"] = 200;
      results["round_trip"] = round_trip;
    }
  }
  return emit(o, "sympl aronhold", results, pass);
}

int run_lattice_roots(const Output& o, int degree) {
  lat::PicardLattice L(degree);
  auto roots = L.roots();
  json by_tag = json::object();
  for (const auto& r : roots) {
    auto tag = L.root_type(r).tag;
    by_tag[tag] = (by_tag.contains(tag) ? by_tag[tag].get<int>() : 0) + 1;
  }
  json results{{"degree", degree}, {"roots", roots.size()}, {"by_type", by_tag}};
  return emit(o, "lattice roots", results, true);
}

int run_lattice_exceptional(const Output& o, int degree) {
  lat::PicardLattice L(degree);
  auto exc = L.exceptional_classes();
  json results{{"degree", degree}, {"exceptional", exc.size()}};
  if (degree == 2) {
    std::set<std::set<lat::Ivec>> pairs;
    for (const auto& e : exc) pairs.insert({e, L.geiser(e)});
    results["pairs"] = pairs.size();
  }
  return emit(o, "lattice exceptional", results, true);
}

int run_weyl_order(const Output& o, int degree, const std::string& method, std::uint64_t budget) {
  weyl::WeylGroup W{lat::PicardLattice(degree)};
  std::uint64_t order =
      method == "closure" ? W.closure_order(budget_value(budget)) : W.order();
  json results{{"degree", degree}, {"method", method}, {"order", order}};
  return emit(o, "weyl order", results, true);
}

int run_weyl_split_check(const Output& o) {
  auto r = acc::criterion(6);
  return emit(o, "weyl split-check", r.certificate, r.pass);
}

int run_weyl_abelian_report(const Output& o) {
  weyl::WeylGroup W{lat::PicardLattice(2)};
  auto report = ab2::analyze_action(W.frame_pair_action());
  json results{{"report", io::report_json(report)},
               {"envelope", io::envelope_json(ab2::envelope(report))}};
  return emit(o, "weyl abelian-report", results, true, true);
}

ab2::ActionReport report_for_source(const std::string& source) {
  if (source == "weyl") {
    weyl::WeylGroup W{lat::PicardLattice(2)};
    return ab2::analyze_action(W.frame_pair_action());
  }
  if (source.size() == 4 && source.rfind("hyp", 0) == 0) {
    int g = source[3] - '0';
    return ab2::analyze_action(hyp::HyperellipticModel(g).odd_form_action());
  }
  throw std::invalid_argument("unknown --source (use weyl, hyp1, hyp2, hyp3)");
}

int run_inv_perm_sw(const Output& o, const std::string& source, int degree, int degree_cap) {
  if (degree < 0 || degree > degree_cap)
    throw std::invalid_argument("--degree must lie in 0..degree-cap");
  auto report = report_for_source(source);
  auto piece = inv::sw_piece(report, degree);
  json results{{"source", source},
               {"degree", degree},
               {"value", io::poly_json(piece)},
               {"rendered", piece.str()}};
  return emit(o, "inv perm-sw", results, true, source == "weyl");
}

int run_inv_pullback(const Output& o, const std::string& matrix_path, int degree, int degree_cap) {
  if (degree < 0 || degree > degree_cap)
    throw std::invalid_argument("--degree must lie in 0..degree-cap");
  std::ifstream f(matrix_path);
  if (!f) throw std::invalid_argument("cannot read matrix file " + matrix_path);
  json jm = json::parse(f);
  auto m = io::mat_from_json(jm);
  if (degree > m.rows()) throw std::invalid_argument("--degree exceeds the matrix row count");
  auto result = inv::pullback(m, inv::sigma(m.rows(), degree));
  json results{{"matrix_rows", m.rows()},
               {"matrix_cols", m.cols()},
               {"degree", degree},
               {"value", io::poly_json(result)},
               {"rendered", result.str()}};
  return emit(o, "inv pullback", results, true);
}

int run_inv_tables(const Output& o) {
  json results{{"sp6", io::table_json(inv::sp6_module_table())},
               {"we7", io::table_json(inv::we7_module_table())}};
  return emit(o, "inv tables", results, true);
}

int run_inv_pullback_certificate(const Output& o) {
  weyl::WeylGroup W{lat::PicardLattice(2)};
  auto report = ab2::analyze_action(W.frame_pair_action());
  json pieces = json::array();
  for (int d = 1; d <= 7; ++d) {
    auto piece = inv::sw_piece(report, d);
    pieces.push_back(json{{"degree", d}, {"value", io::poly_json(piece)}});
  }
  json results{{"pullbacks_through_frame", pieces},
               {"degree_1_vanishes", inv::sw_piece(report, 1).is_zero()},
               {"tables", json{{"sp6", io::table_json(inv::sp6_module_table())},
                               {"we7", io::table_json(inv::we7_module_table())}}}};
  return emit(o, "inv pullback-certificate", results, true, true);
}

int run_torus_sample(const Output& o, std::int64_t prime, std::uint64_t seed) {
  lat::PicardLattice L(2);
  torus::Fp f(prime);
  std::mt19937_64 rng(seed);
  auto chi = torus::Character::random(L, f, rng);
  json results{{"character", io::character_json(chi)},
               {"in_divisor", torus::in_divisor(chi)}};
  if (auto witness = torus::divisor_witness(chi))
    results["witness_root"] = io::ivec_json(*witness);
  return emit(o, "torus sample", results, true);
}

int run_torus_verify(const Output& o, std::int64_t prime, std::uint64_t seed) {
  lat::PicardLattice L(2);
  torus::Fp f(prime);
  std::mt19937_64 rng(seed);
  auto chi = torus::Character::random(L, f, rng);
  int skipped = 0;
  while (torus::in_divisor(chi)) {
    chi = torus::Character::random(L, f, rng);
    ++skipped;
  }
  auto cfg = torus::points_from_torus(chi);
  auto report = torus::general_position(f, cfg);
  json results{{"character", io::character_json(chi)},
               {"divisor_samples_skipped", skipped},
               {"configuration", io::configuration_json(cfg, report)}};
  return emit(o, "torus verify", results, report.ok());
}

int run_torus_experiment(const Output& o, std::int64_t prime, std::uint64_t seed, int trials) {
  lat::PicardLattice L(2);
  torus::Fp f(prime);
  auto stats = torus::equivalence_experiment(L, f, seed, trials);
  json results{{"prime", prime}, {"seed", seed}, {"stats", io::stats_json(stats)}};
  return emit(o, "torus experiment", results, stats.agreements == stats.trials);
}

int run_report_all(const Output& o, bool fault_inject) {
  auto all = acc::run_all(fault_inject);
  json criteria = json::array();
  bool pass = true;
  std::string first_failure;
  for (const auto& r : all) {
    pass = pass && r.pass;
    if (!r.pass && first_failure.empty()) first_failure = r.name;
    criteria.push_back(json{{"number", r.number},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"certificate", r.certificate}});
  }
  json results{{"criteria", criteria}, {"passed", pass}};
  if (!pass) results["first_failure"] = first_failure;
  if (!o.as_json)
    for (const auto& r : all)
      std::printf("%s %2d %s\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str());
  return emit(o, "report-all", results, pass, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite structure toolkit: forms, lattices, reflection groups, configurations"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "print the full JSON certificate");
  app.add_option("--out", out.out_path, "also write the certificate to this path");

  int g = 3, degree = 2, sw_degree = 0, degree_cap = 14, trials = 200;
  std::int64_t prime = 101;
  std::uint64_t seed = 42, budget = 0;
  bool verify = false, fault_inject = false;
  std::string method = "count", source = "weyl", matrix_path;

  int rc = 0;
  auto run = [&](auto&& fn) {
    return [&, fn] { rc = fn(); };
  };

  auto* sympl = app.add_subcommand("sympl", "quadratic forms over F2")->fallthrough();
  auto* sympl_enum = sympl->add_subcommand("enum", "census of the 2^{2g} refinements")->fallthrough();
  sympl_enum->add_option("--g", g, "genus")->capture_default_str();
  sympl_enum->callback(run([&] { return run_sympl_enum(out, g); }));
  auto* sympl_aron = sympl->add_subcommand("aronhold", "distinguished odd bases")->fallthrough();
  sympl_aron->add_option("--g", g, "genus")->capture_default_str();
  sympl_aron->add_flag("--verify", verify, "validate bases and conversions");
  sympl_aron->callback(run([&] { return run_sympl_aronhold(out, g, verify); }));

  auto* lattice = app.add_subcommand("lattice", "rank 10-d hyperbolic lattices")->fallthrough();
  auto* lattice_roots = lattice->add_subcommand("roots", "norm -2 classes orthogonal to K")->fallthrough();
  lattice_roots->add_option("--degree", degree, "surface degree 1..7")->capture_default_str();
  lattice_roots->callback(run([&] { return run_lattice_roots(out, degree); }));
  auto* lattice_exc = lattice->add_subcommand("exceptional", "norm -1 classes and their pairs")->fallthrough();
  lattice_exc->add_option("--degree", degree, "surface degree 2..7")->capture_default_str();
  lattice_exc->callback(run([&] { return run_lattice_exceptional(out, degree); }));

  auto* wy = app.add_subcommand("weyl", "reflection group computations")->fallthrough();
  auto* wy_order = wy->add_subcommand("order", "group order")->fallthrough();
  wy_order->add_option("--degree", degree, "surface degree")->capture_default_str();
  wy_order->add_option("--method", method, "count or closure")->capture_default_str();
  wy_order->add_option("--budget", budget, "element cap for closure (or E7_BUDGET)");
  wy_order->callback(run([&] { return run_weyl_order(out, degree, method, budget); }));
  wy->add_subcommand("split-check", "kernel/image of the mod-2 quotient")->fallthrough()
      ->callback(run([&] { return run_weyl_split_check(out); }));
  wy->add_subcommand("abelian-report", "orbit/character report of the frame action")->fallthrough()
      ->callback(run([&] { return run_weyl_abelian_report(out); }));

  auto* iv = app.add_subcommand("inv", "square-free invariant classes")->fallthrough();
  auto* iv_sw = iv->add_subcommand("perm-sw", "graded class of a reported action")->fallthrough();
  iv_sw->add_option("--source", source, "weyl, hyp1, hyp2, hyp3")->capture_default_str();
  iv_sw->add_option("--degree", sw_degree, "graded piece")->capture_default_str();
  iv_sw->add_option("--degree-cap", degree_cap, "largest allowed degree")->capture_default_str();
  iv_sw->callback(run([&] { return run_inv_perm_sw(out, source, sw_degree, degree_cap); }));
  auto* iv_pb = iv->add_subcommand("pullback", "pull a symmetric class along a 0/1 matrix")->fallthrough();
  iv_pb->add_option("--matrix", matrix_path, "JSON file with the matrix rows")->required();
  iv_pb->add_option("--degree", sw_degree, "symmetric degree")->capture_default_str();
  iv_pb->add_option("--degree-cap", degree_cap, "largest allowed degree")->capture_default_str();
  iv_pb->callback(run([&] { return run_inv_pullback(out, matrix_path, sw_degree, degree_cap); }));
  iv->add_subcommand("tables", "generator degree tables")->fallthrough()
      ->callback(run([&] { return run_inv_tables(out); }));
  iv->add_subcommand("pullback-certificate", "degree 1..7 pullbacks through the frame")->fallthrough()
      ->callback(run([&] { return run_inv_pullback_certificate(out); }));

  auto* tr = app.add_subcommand("torus", "point configurations from split tori")->fallthrough();
  auto* tr_sample = tr->add_subcommand("sample", "draw one character")->fallthrough();
  tr_sample->add_option("--prime", prime, "field size, 2 mod 3")->capture_default_str();
  tr_sample->add_option("--seed", seed, "rng seed")->capture_default_str();
  tr_sample->callback(run([&] { return run_torus_sample(out, prime, seed); }));
  auto* tr_verify = tr->add_subcommand("verify", "build and certify a 7-point configuration")->fallthrough();
  tr_verify->add_option("--prime", prime, "field size, 2 mod 3")->capture_default_str();
  tr_verify->add_option("--seed", seed, "rng seed")->capture_default_str();
  tr_verify->callback(run([&] { return run_torus_verify(out, prime, seed); }));
  auto* tr_exp = tr->add_subcommand("experiment", "divisor vs general position agreement")->fallthrough();
  tr_exp->add_option("--prime", prime, "field size, 2 mod 3")->capture_default_str();
  tr_exp->add_option("--seed", seed, "rng seed")->capture_default_str();
  tr_exp->add_option("--trials", trials, "sample count")->capture_default_str();
  tr_exp->callback(run([&] { return run_torus_experiment(out, prime, seed, trials); }));

  auto* all = app.add_subcommand("report-all", "run the full acceptance battery")->fallthrough();
  all->add_flag("--fault-inject", fault_inject, "deliberately fail one criterion (test hook)");
  all->callback(run([&] { return run_report_all(out, fault_inject); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const e7kit::budget_error& e) {
    std::fprintf(stderr, "%s\n", json{{"error", e.what()}, {"kind", "budget"}}.dump().c_str());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", json{{"error", e.what()}, {"kind", "parameter"}}.dump().c_str());
    return 2;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "%s\n", json{{"error", e.what()}, {"kind", "parameter"}}.dump().c_str());
    return 2;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "%s\n", json{{"error", e.what()}, {"kind", "parameter"}}.dump().c_str());
    return 2;
  }
  return rc;
}
