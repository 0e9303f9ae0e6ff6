#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "e7kit/acceptance.hpp"
#include "e7kit/hyperelliptic.hpp"
#include "e7kit/json_io.hpp"

namespace py = pybind11;
using namespace e7kit;

namespace {

py::object to_py(const io::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<perm::Permutation> to_perms(const std::vector<std::vector<int>>& images) {
  std::vector<perm::Permutation> out;
  for (const auto& img : images) out.emplace_back(img);
  return out;
}

}  // namespace

PYBIND11_MODULE(_e7kit, m) {
  m.doc() = "finite structure toolkit: forms, lattices, reflection groups, configurations";

  py::register_exception<budget_error>(m, "BudgetError");

  py::class_<sym::SymplecticSpace>(m, "SymplecticSpace")
      .def(py::init<int>(), py::arg("g"))
      .def("g", &sym::SymplecticSpace::g)
      .def("dim", &sym::SymplecticSpace::dim);

  py::class_<sym::QuadraticForm>(m, "QuadraticForm")
      .def("arf", &sym::QuadraticForm::arf)
      .def("zero_count", &sym::QuadraticForm::zero_count)
      .def("hex", &sym::QuadraticForm::hex)
      .def("__eq__", [](const sym::QuadraticForm& a, const sym::QuadraticForm& b) { return a == b; })
      .def("__repr__", [](const sym::QuadraticForm& q) { return "QuadraticForm(" + q.hex() + ")"; });

  m.def("enumerate_forms", &sym::enumerate_forms, py::arg("g"));
  m.def("sp_order", &sym::sp_order, py::arg("g"));

  py::class_<lat::PicardLattice>(m, "PicardLattice")
      .def(py::init<int>(), py::arg("degree"))
      .def("degree", &lat::PicardLattice::degree)
      .def("rank", &lat::PicardLattice::rank)
      .def("roots", &lat::PicardLattice::roots)
      .def("exceptional_classes", &lat::PicardLattice::exceptional_classes)
      .def("pair", &lat::PicardLattice::pair)
      .def("geiser", &lat::PicardLattice::geiser)
      .def("root_type",
           [](const lat::PicardLattice& L, const lat::Ivec& r) {
             return to_py(io::root_type_json(L.root_type(r)));
           });

  py::class_<weyl::WeylGroup>(m, "WeylGroup")
      .def(py::init([](int degree) { return weyl::WeylGroup(lat::PicardLattice(degree)); }),
           py::arg("degree"))
      .def("order", &weyl::WeylGroup::order)
      .def("frame_roots",
           [](const weyl::WeylGroup& W) { return W.orthogonal_frame().roots; })
      .def("frame_pair_action",
           [](const weyl::WeylGroup& W) {
             std::vector<std::vector<int>> out;
             for (const auto& p : W.frame_pair_action()) out.push_back(p.images());
             return out;
           });

  m.def("hyperelliptic_image_size",
        [](int g) { return hyp::HyperellipticModel(g).image_size(); }, py::arg("g"));

  m.def("analyze_action",
        [](const std::vector<std::vector<int>>& gens) {
          return to_py(io::report_json(ab2::analyze_action(to_perms(gens))));
        },
        py::arg("generator_images"));
  m.def("envelope_of",
        [](const std::vector<std::vector<int>>& gens) {
          return to_py(io::envelope_json(ab2::envelope(ab2::analyze_action(to_perms(gens)))));
        },
        py::arg("generator_images"));
  m.def("sw_piece",
        [](const std::vector<std::vector<int>>& gens, int degree) {
          return to_py(io::poly_json(inv::sw_piece(ab2::analyze_action(to_perms(gens)), degree)));
        },
        py::arg("generator_images"), py::arg("degree"));

  m.def("sp6_table", [] { return to_py(io::table_json(inv::sp6_module_table())); });
  m.def("we7_table", [] { return to_py(io::table_json(inv::we7_module_table())); });

  m.def("equivalence_experiment",
        [](std::int64_t prime, std::uint64_t seed, int trials) {
          lat::PicardLattice L(2);
          torus::Fp f(prime);
          return to_py(io::stats_json(torus::equivalence_experiment(L, f, seed, trials)));
        },
        py::arg("prime"), py::arg("seed"), py::arg("trials"));
  m.def("conditioned_trial",
        [](std::int64_t prime, std::uint64_t seed, const lat::Ivec& root) {
          lat::PicardLattice L(2);
          torus::Fp f(prime);
          return to_py(io::trial_json(torus::conditioned_trial(L, f, seed, root)));
        },
        py::arg("prime"), py::arg("seed"), py::arg("root"));

  m.def("criterion",
        [](int number) {
          auto r = acc::criterion(number);
          return to_py(io::json{{"number", r.number},
                                {"name", r.name},
                                {"pass", r.pass},
                                {"detail", r.detail},
                                {"certificate", r.certificate}});
        },
        py::arg("number"));
  m.def("run_all",
        [](bool fault_inject) {
          io::json out = io::json::array();
          for (const auto& r : acc::run_all(fault_inject))
            out.push_back(io::json{{"number", r.number},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
          return to_py(out);
        },
        py::arg("fault_inject") = false);
}
