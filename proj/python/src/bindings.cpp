#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qthook/acceptance.hpp"
#include "qthook/dposet.hpp"
#include "qthook/hookformula.hpp"
#include "qthook/hypergeom.hpp"

namespace py = pybind11;
using namespace qthook;

namespace {

// Reports cross the boundary as JSON text; the package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

ColoredPoset poset(const std::string& family, const std::string& alpha, const std::string& beta, int f) {
    return buildFamily({parseFamily(family), Partition::parse(alpha), Partition::parse(beta), f});
}

QRat rat(const std::string& s) {
    QRat r(s);
    r.canonicalize();
    return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact checks of the (q,t)-hook formula for d-complete posets";
    py::register_exception<std::invalid_argument>(m, "UsageError", PyExc_ValueError);

    m.def(
        "verify_okada",
        [](const std::string& family, const std::string& alpha, const std::string& beta, int f, int degree,
           const std::string& mode, int points, std::uint64_t seed) {
            auto P = poset(family, alpha, beta, f);
            Mode md = mode == "eval" ? Mode::Eval : Mode::Exact;
            if (mode != "eval" && mode != "exact") throw std::invalid_argument("mode must be exact or eval");
            py::gil_scoped_release release;
            auto rep = verifyOkada(P, degree, md, md == Mode::Eval ? samplePoints(seed, points) : std::vector<EvalPoint>{});
            rep.degree = degree;
            return dump(rep.toJson());
        },
        py::arg("family"), py::arg("alpha"), py::arg("beta") = "", py::arg("f") = 0, py::arg("degree") = 3,
        py::arg("mode") = "exact", py::arg("points") = 3, py::arg("seed") = 42);

    m.def("identity_names", &identityNames);
    m.def(
        "verify_identity",
        [](const std::string& name, std::uint64_t seed, int trials) {
            py::gil_scoped_release release;
            return dump(identitySweep(name, seed, trials).toJson());
        },
        py::arg("name"), py::arg("seed") = 42, py::arg("trials") = 0);

    m.def(
        "run_criterion",
        [](int id, std::uint64_t seed) {
            py::gil_scoped_release release;
            return dump(runCriterion(id, {seed, "desk"}).toJson());
        },
        py::arg("id"), py::arg("seed") = 42);

    m.def(
        "poset_json",
        [](const std::string& family, const std::string& alpha, const std::string& beta, int f) {
            return dump(toJson(poset(family, alpha, beta, f)));
        },
        py::arg("family"), py::arg("alpha"), py::arg("beta") = "", py::arg("f") = 0);
    m.def(
        "poset_dot",
        [](const std::string& family, const std::string& alpha, const std::string& beta, int f) {
            return toDot(poset(family, alpha, beta, f));
        },
        py::arg("family"), py::arg("alpha"), py::arg("beta") = "", py::arg("f") = 0);
    m.def(
        "hook_agreement",
        [](const std::string& family, const std::string& alpha, const std::string& beta, int f) {
            return dump(hookAgreementCheck(poset(family, alpha, beta, f)).toJson(false));
        },
        py::arg("family"), py::arg("alpha"), py::arg("beta") = "", py::arg("f") = 0);

    // Rationals travel as "p/q" strings.
    m.def(
        "q_poch", [](const std::string& a, const std::string& q, int n) { return qPoch(rat(a), rat(q), n).get_str(); },
        py::arg("a"), py::arg("q"), py::arg("n"));
    m.def(
        "gasper_check",
        [](const std::string& a, const std::string& b, const std::string& d, const std::string& q, int n) {
            return dump(gasperCheck(rat(a), rat(b), rat(d), rat(q), n).toJson(false));
        },
        py::arg("a"), py::arg("b"), py::arg("d"), py::arg("q"), py::arg("n"));
}
