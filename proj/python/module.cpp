// Python bindings for the rank formulas, the combinatorial dimension
// machinery, and the brute-force verification entry points.
#include "sprank/gf2rank.hpp"
#include "sprank/htype.hpp"
#include "sprank/rank_formulas.hpp"
#include "sprank/sbf.hpp"
#include "sprank/symplectic.hpp"
#include "sprank/wedge.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>

namespace py = pybind11;
using namespace sprank;

namespace {

py::int_ to_pyint(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list matrix_to_list(const BigMat& a) {
    py::list rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < a.size(); ++j) row.append(to_pyint(a.at(i, j)));
        rows.append(row);
    }
    return rows;
}

std::size_t bruteforce_rank(int m, int r, int t, int threads, bool force) {
    const BigInt q = BigInt(1) << t;
    if (!force && num_Ir(m, r, q) * num_points(m, q) > (BigInt(1) << 34)) {
        throw std::runtime_error("incidence matrix exceeds 2^34 bits; pass force=True");
    }
    const SympSpace sp(m, t);
    return rank_gf2_stream(
        [&](const std::function<void(BitRow)>& emit) { stream_incidence_rows(sp, r, emit); },
        static_cast<std::size_t>(num_points(m, q).convert_to<long long>()), threads);
}

py::dict verify_sbf(int m, int r, int t, bool force, int threads) {
    const BasisReport rep = verify_basis_theorem(m, r, t, force, threads);
    py::dict d;
    d["m"] = rep.m;
    d["r"] = rep.r;
    d["t"] = rep.t;
    d["rank_formula"] = to_pyint(rep.rank_formula);
    d["sbf_count"] = rep.sbf_count;
    d["eval_rank"] = rep.eval_rank;
    d["bruteforce_rank"] = rep.bruteforce_rank;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["witness"] = c.witness;
        checks.append(e);
    }
    d["checks"] = checks;
    d["pass"] = rep.all_pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact 2-ranks of symplectic point-subspace incidence matrices";

    mod.def("rank_closed_form",
            [](int m, int r, int t) { return to_pyint(rank_closed_form(m, r, t)); },
            py::arg("m"), py::arg("r"), py::arg("t"),
            "1 + Trace(A^t) for the (2m-r)x(2m-r) dimension matrix A");
    mod.def("rank_via_htypes",
            [](int m, int r, int t) { return to_pyint(rank_via_htypes(m, r, t)); },
            py::arg("m"), py::arg("r"), py::arg("t"),
            "the same rank as a sum over bounded H-types of filtration dimensions");
    mod.def("build_A", [](int m, int r) { return matrix_to_list(build_A(m, r)); },
            py::arg("m"), py::arg("r"));
    mod.def("build_A_prime", [](int p, int m) { return matrix_to_list(build_A_prime(p, m)); },
            py::arg("p"), py::arg("m"));
    mod.def("d_lambda", [](int p, int m, int lam) { return to_pyint(d_lambda(p, m, lam)); },
            py::arg("p"), py::arg("m"), py::arg("lam"));
    mod.def("rank_odd_model",
            [](int p, int m, int t) { return to_pyint(rank_odd_model(p, m, t)); },
            py::arg("p"), py::arg("m"), py::arg("t"));

    mod.def("dim_S", &dim_S, py::arg("m"), py::arg("lam"), py::arg("level"),
            "dimension of the level filtration piece of the degree-lam exterior power");
    mod.def("weyl_basis_count",
            [](int m, int lam) { return weyl_basis(m, lam).size(); }, py::arg("m"),
            py::arg("lam"));
    mod.def("filtration_basis_count",
            [](int m, int lam, int level) { return filtration_basis(m, lam, level).size(); },
            py::arg("m"), py::arg("lam"), py::arg("level"));

    mod.def("htype_to_type", &htype_to_type, py::arg("s"), py::arg("m"));
    mod.def("type_to_htype",
            [](const TypeTuple& lambda, int m) -> py::object {
                const auto s = type_to_htype(lambda, m);
                if (!s) return py::none();
                return py::cast(*s);
            },
            py::arg("lam"), py::arg("m"));
    mod.def("enumerate_htypes_leq", &enumerate_htypes_leq, py::arg("bound"), py::arg("m"),
            py::arg("t"));

    mod.def("num_points",
            [](int m, int t) { return to_pyint(num_points(m, BigInt(1) << t)); },
            py::arg("m"), py::arg("t"));
    mod.def("num_subspaces",
            [](int m, int r, int t) { return to_pyint(num_Ir(m, r, BigInt(1) << t)); },
            py::arg("m"), py::arg("r"), py::arg("t"),
            "|I_r|: totally isotropic r-subspaces or their perps");

    mod.def("bruteforce_rank", &bruteforce_rank, py::arg("m"), py::arg("r"), py::arg("t"),
            py::arg("threads") = 1, py::arg("force") = false,
            "GF(2) rank of the enumerated incidence matrix B_{r,1}");
    mod.def("sbf_count",
            [](int m, int r, int t) { return enumerate_admissible_sbfs(m, r, t).size(); },
            py::arg("m"), py::arg("r"), py::arg("t"),
            "number of nonconstant r-admissible symplectic basis functions");
    mod.def("verify_sbf", &verify_sbf, py::arg("m"), py::arg("r"), py::arg("t"),
            py::arg("force") = false, py::arg("threads") = 1,
            "run the basis-theorem checks; returns a report dict");

    mod.def("export_sms",
            [](int m, int r, int t, const std::string& path, bool force) {
                const BigInt q = BigInt(1) << t;
                if (!force && num_Ir(m, r, q) * num_points(m, q) > (BigInt(1) << 34)) {
                    throw std::runtime_error(
                        "incidence matrix exceeds 2^34 bits; pass force=True");
                }
                const SympSpace sp(m, t);
                std::ofstream out(path);
                if (!out) throw std::runtime_error("cannot open " + path);
                write_sms(out, incidence_matrix(sp, r));
            },
            py::arg("m"), py::arg("r"), py::arg("t"), py::arg("path"),
            py::arg("force") = false);
    mod.def("rank_sms",
            [](const std::string& path, bool m4r) {
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path);
                const BitMatrix b = read_sms(in);
                return m4r ? rank_gf2_m4r(b) : rank_gf2(b);
            },
            py::arg("path"), py::arg("m4r") = false);
}
