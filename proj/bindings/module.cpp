#include "thickset/cli.hpp"
#include "thickset/nilpower.hpp"
#include "thickset/presburger.hpp"
#include "thickset/rotation.hpp"
#include "thickset/vdw.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace thickset;

namespace {

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact thick/generic set calculus";

    // --- one-variable eventually periodic sets -----------------------------
    m.def("normalize", [](const std::string& text) {
        return presburger::print(presburger::normalize(presburger::parse(text)));
    });
    m.def("set_contains", [](const std::string& text, long long x) {
        return presburger::parse(text).contains(Int(x));
    });
    m.def("set_equal", [](const std::string& a, const std::string& b) {
        return presburger::set_equal(presburger::parse(a), presburger::parse(b));
    });
    m.def("decide_thick", [](const std::string& text, size_t cap) {
        presburger::ThicknessVerdict v = presburger::decide_thick(presburger::parse(text), cap);
        py::dict d;
        d["thick"] = v.thick;
        d["capped"] = v.capped;
        d["minimal_lower_bound"] = v.minimal_lower_bound;
        if (v.minimal) d["minimal"] = *v.minimal;
        d["independent_witness"] = int_strings(v.independent_witness);
        if (!v.thick) d["witness_spacing"] = v.witness_spacing.str();
        return d;
    }, py::arg("text"), py::arg("cap") = 64);
    m.def("decide_generic", [](const std::string& text) {
        presburger::GenericVerdict v = presburger::decide_generic(presburger::parse(text));
        py::dict d;
        d["generic"] = v.generic;
        d["m"] = v.m;
        d["lower_bound"] = v.lower_bound;
        d["exact"] = v.exact;
        d["translates"] = int_strings(v.translates);
        return d;
    });
    m.def("lattice_in_double", [](const std::string& text) {
        presburger::LatticeResult r = presburger::lattice_in_double(presburger::parse(text));
        py::dict d;
        d["b"] = r.b.str();
        d["window"] = r.window.str();
        d["verified"] = r.verified;
        return d;
    });

    // --- surd rotation and Bohr sets ----------------------------------------
    m.def("rotation_position", [](unsigned d, long long n) {
        return rotation::rotation_position(d, Int(n)).str();
    });
    m.def("bohr_member", [](unsigned d, const std::string& t, long long n) {
        rotation::BohrSet X(rotation::CircleHom::surd_rotation(d), parse_rational(t));
        return X.member(Int(n));
    });
    m.def("bohr_thickness", [](unsigned d, const std::string& t, long long window) {
        rotation::BohrThickness bt = rotation::thickness_of_bohr(d, parse_rational(t), window);
        py::dict out;
        out["analytic_bound"] = bt.analytic_bound;
        out["stated_constant"] = bt.stated_constant;
        out["empirical_min"] = bt.empirical_min;
        out["witness"] = int_strings(bt.witness);
        out["certificate"] = bt.certificate;
        return out;
    }, py::arg("d"), py::arg("t"), py::arg("window") = 10000);
    m.def("verify_product_identity",
          [](unsigned d, const std::string& t1, const std::string& t2, long long window,
             long long witness_bound) {
              auto r = rotation::verify_product_identity(d, parse_rational(t1), parse_rational(t2),
                                                         window, witness_bound);
              return r.status == rotation::VerifyStatus::Verified;
          },
          py::arg("d"), py::arg("t1"), py::arg("t2"), py::arg("window") = 500,
          py::arg("witness_bound") = 100000);

    // --- coverings ----------------------------------------------------------
    m.def("build_covering", [](unsigned n, int variant, unsigned d) {
        vdw::Covering c = vdw::build_covering(
            n, variant == 1 ? vdw::Variant::ThreeNPlusOne : vdw::Variant::TwoNPlusOne, d);
        py::dict out;
        out["t"] = rational_str(c.base.t());
        out["translates"] = int_strings(c.translates);
        out["covers"] = c.certificate.covers;
        return out;
    }, py::arg("n"), py::arg("variant") = 1, py::arg("d") = 2);

    // --- Heisenberg power subgroups ------------------------------------------
    m.def("heisenberg_power_index", [](long long n) {
        return nilpower::power_subgroup(Int(n)).index().str();
    });
    m.def("malcev_root", [](long long x, long long y, long long z, long long n) -> py::object {
        auto r = nilpower::malcev_root(HeisElem{Int(x), Int(y), Int(z)}, Int(n));
        if (!r) return py::none();
        return py::make_tuple(r->x.str(), r->y.str(), r->z.str());
    });

    // --- full command line ----------------------------------------------------
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"thickset"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
