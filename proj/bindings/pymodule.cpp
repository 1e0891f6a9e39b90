#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dnq/coeffq.hpp"
#include "dnq/formulas.hpp"
#include "dnq/roots.hpp"
#include "dnq/verify.hpp"

namespace py = pybind11;
using namespace dnq;

namespace {

QuiverDn quiver_of(int n, const std::string& orient) { return QuiverDn::from_orientation_string(n, orient); }

DimVec dimvec_of(const std::map<std::string, int>& entries) {
    DimVec d;
    for (auto& [name, x] : entries) d.set(VarId::parse(name), x);
    return d;
}

std::map<std::string, int> dimvec_out(const DimVec& d) {
    std::map<std::string, int> out;
    for (auto& [v, x] : d.entries()) out[v.name()] = x;
    return out;
}

}  // namespace

PYBIND11_MODULE(_dnq, m) {
    m.doc() = "F-polynomials and cluster variables for affine D~n quivers";

    m.def(
        "fpoly",
        [](int n, const std::map<std::string, int>& root, const std::string& orient) {
            QuiverDn q = quiver_of(n, orient);
            return f_root(q, dimvec_of(root)).to_string();
        },
        py::arg("n"), py::arg("root"), py::arg("orient") = "",
        "Canonical text of the F-polynomial of the indecomposable with the given dimension vector");

    m.def(
        "fpoly_json",
        [](int n, const std::map<std::string, int>& root, const std::string& orient) {
            QuiverDn q = quiver_of(n, orient);
            return laurent_to_json(f_root(q, dimvec_of(root)));
        },
        py::arg("n"), py::arg("root"), py::arg("orient") = "");

    m.def(
        "fpoly_ones",
        [](int n, const std::map<std::string, int>& root, const std::string& orient) {
            QuiverDn q = quiver_of(n, orient);
            return evaluate_ones(f_root(q, dimvec_of(root))).str();
        },
        py::arg("n"), py::arg("root"), py::arg("orient") = "",
        "Total Euler characteristic: the F-polynomial specialized at 1");

    m.def(
        "cc_variable",
        [](int n, const std::map<std::string, int>& root, const std::string& orient) {
            QuiverDn q = quiver_of(n, orient);
            DimVec d = dimvec_of(root);
            return cc_variable(q, d, euler_table_from_froot(q, d)).to_string();
        },
        py::arg("n"), py::arg("root"), py::arg("orient") = "");

    m.def(
        "delta", [](int n) { return dimvec_out(QuiverDn::subspace(n).delta()); }, py::arg("n"));

    m.def(
        "classify",
        [](int n, const std::map<std::string, int>& root, const std::string& orient) {
            QuiverDn q = quiver_of(n, orient);
            RootInfo info = classify_root(q, dimvec_of(root));
            std::map<std::string, std::string> out;
            switch (info.kind) {
                case RootKind::RealPreprojective: out["kind"] = "preprojective"; break;
                case RootKind::RealPreinjective: out["kind"] = "preinjective"; break;
                case RootKind::RealRegular: out["kind"] = "regular"; break;
                case RootKind::ImaginaryMultipleOfDelta: out["kind"] = "imaginary"; break;
                default: out["kind"] = "other";
            }
            out["defect"] = info.defect.str();
            out["r"] = std::to_string(info.r);
            return out;
        },
        py::arg("n"), py::arg("root"), py::arg("orient") = "");

    m.def(
        "snake_fpoly",
        [](int s, int n) { return snake_recursion(s, n).to_string(); }, py::arg("s"), py::arg("n"),
        "Generating function of admissible subsets of the snake quiver, by the symbolic recursion");

    m.def(
        "snake_admissible_count",
        [](int s, int n) { return static_cast<long long>(count_admissible(build_snake(s, n))); },
        py::arg("s"), py::arg("n"));

    m.def(
        "verify",
        [](const std::string& suite, int rmax, int height, int primes) {
            VerifyOptions opt;
            opt.rmax = rmax;
            opt.height = height;
            opt.primes = primes;
            VerifyResult r = run_verify_suite(suite, opt);
            return py::make_tuple(r.pass, r.checks, r.detail);
        },
        py::arg("suite"), py::arg("rmax") = 4, py::arg("height") = 12, py::arg("primes") = 2);

    m.def("verify_suites", [] { return verify_suite_names(); });
}
