// Python bindings for the main operations: exact lattice algebra, root
// systems, Weyl kernels, certificates and the bound engine.  Structured
// results cross the boundary as JSON strings; the package wrapper decodes
// them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "edtool/edbounds.hpp"
#include "edtool/errors.hpp"
#include "edtool/serialize.hpp"

namespace py = pybind11;

namespace {

using edt::intlat::Int;
using edt::intlat::IntegerMatrix;
using Rows = std::vector<std::vector<long long>>;

IntegerMatrix to_matrix(const Rows& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must be nonempty");
    IntegerMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size())
            throw std::invalid_argument("rows must have equal length");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = long(rows[i][j]);
    }
    return m;
}

py::object int_from_mpz(const Int& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list matrix_to_list(const IntegerMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_from_mpz(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

std::vector<edt::intlat::Vec> to_vecs(const Rows& rows) {
    std::vector<edt::intlat::Vec> out;
    for (const auto& r : rows) {
        edt::intlat::Vec v;
        v.reserve(r.size());
        for (long long x : r) v.emplace_back(long(x));
        out.push_back(std::move(v));
    }
    return out;
}

edt::rootsys::RootSystem build(const std::string& label) {
    return edt::rootsys::RootSystem::build(edt::rootsys::DynkinType::parse(label));
}

edt::genfree::SweepOptions sweep_options(std::uint64_t limit, std::uint64_t seed, unsigned trials) {
    edt::genfree::SweepOptions opts;
    opts.limit = limit;
    opts.seed = seed;
    opts.mc_trials = trials;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact essential-dimension bounds and generic-freeness certificates";

    py::register_exception<edt::RefusalError>(m, "Refusal", PyExc_RuntimeError);

    // -- integer lattice algebra
    m.def("snf", [](const Rows& rows) {
        auto s = edt::intlat::snf(to_matrix(rows));
        py::dict out;
        py::list diag;
        for (const auto& d : s.diagonal()) diag.append(int_from_mpz(d));
        out["diagonal"] = diag;
        out["u"] = matrix_to_list(s.U);
        out["v"] = matrix_to_list(s.V);
        out["rank"] = s.rank();
        return out;
    });
    m.def("hnf", [](const Rows& rows) {
        return matrix_to_list(edt::intlat::hnf_rows(to_matrix(rows)));
    });
    m.def("kernel_basis", [](const Rows& rows) {
        py::list out;
        for (const auto& v : edt::intlat::kernel_basis(to_matrix(rows))) {
            py::list pv;
            for (const auto& x : v) pv.append(int_from_mpz(x));
            out.append(pv);
        }
        return out;
    });
    m.def("generates_full_lattice", [](const Rows& vectors, std::size_t rank) {
        return edt::intlat::generates_full_lattice(to_vecs(vectors), rank);
    });
    m.def("cokernel_order", [](const Rows& vectors, std::size_t rank) -> py::object {
        auto o = edt::intlat::cokernel_order(to_vecs(vectors), rank);
        if (!o) return py::none();
        return int_from_mpz(*o);
    });

    // -- root systems and Weyl groups
    m.def("root_count", [](const std::string& label) { return build(label).root_count(); });
    m.def("short_root_count",
          [](const std::string& label) { return build(label).short_roots().size(); });
    m.def("has_minus_one", [](const std::string& label) { return build(label).has_minus_one(); });
    m.def("cartan_matrix",
          [](const std::string& label) { return matrix_to_list(build(label).cartan_matrix()); });
    m.def("weyl_order",
          [](const std::string& label) { return int_from_mpz(edt::weyl::weyl_order(build(label))); });
    m.def("orbit_size", [](const std::string& label, const std::vector<int>& weight) {
        return edt::weyl::orbit(build(label), weight).size();
    });
    m.def(
        "kernel_mod_p",
        [](const std::string& label, unsigned p, bool include_minus_one) {
            auto rs = build(label);
            auto k = edt::weyl::kernel_mod_p(rs, p, include_minus_one);
            py::dict out;
            out["order"] = int_from_mpz(k.order);
            out["structure"] = edt::weyl::abelian_2_structure(k);
            out["elementary_abelian_2"] = k.elementary_abelian_2;
            return out;
        },
        py::arg("type"), py::arg("p"), py::arg("include_minus_one") = true);

    // -- representation data
    m.def("c_lambda2_dim", &edt::reps::c_lambda2_dim);
    m.def("spin_faithful_dim", &edt::reps::spin_faithful_dim);

    // -- certificates (JSON payloads)
    auto strategy = [](const std::string& s) { return edt::genfree::strategy_from_string(s); };
    m.def(
        "certify_short_json",
        [strategy](const std::string& label, const std::string& strat, std::uint64_t limit,
                   std::uint64_t seed, unsigned trials) {
            auto cert = edt::genfree::certify_short(build(label), strategy(strat),
                                                    sweep_options(limit, seed, trials));
            return edt::serialize::certificate_json(cert).dump();
        },
        py::arg("type"), py::arg("strategy") = "auto", py::arg("limit") = 0,
        py::arg("seed") = 1, py::arg("trials") = 20);
    m.def(
        "certify_minuscule_json",
        [strategy](const std::string& label, unsigned weight, const std::string& strat,
                   std::uint64_t limit, std::uint64_t seed, unsigned trials) {
            auto cert = edt::genfree::certify_minuscule(build(label), weight, strategy(strat),
                                                        sweep_options(limit, seed, trials));
            return edt::serialize::certificate_json(cert).dump();
        },
        py::arg("type"), py::arg("weight"), py::arg("strategy") = "auto", py::arg("limit") = 0,
        py::arg("seed") = 1, py::arg("trials") = 20);
    m.def(
        "certify_half_spin_json",
        [strategy](unsigned n, const std::string& strat, std::uint64_t limit, std::uint64_t seed,
                   unsigned trials) {
            auto cert = edt::genfree::certify_half_spin(n, strategy(strat),
                                                        sweep_options(limit, seed, trials));
            return edt::serialize::certificate_json(cert).dump();
        },
        py::arg("n"), py::arg("strategy") = "auto", py::arg("limit") = 0, py::arg("seed") = 1,
        py::arg("trials") = 20);
    m.def("certify_projs_json", [](unsigned n) {
        return edt::serialize::certificate_json(edt::genfree::certify_projs(n)).dump();
    });

    // -- bound engine (JSON payloads)
    m.def(
        "best_bound_json",
        [](const std::string& type, const std::string& isogeny, unsigned mu, unsigned p) {
            using namespace edt::edbounds;
            auto t = edt::rootsys::DynkinType::parse(type);
            GroupDescriptor d;
            if (isogeny == "adjoint" || isogeny == "self")
                d = adjoint_group(t, p);
            else if (isogeny == "sc")
                d = mu ? sl_quotient(t.rank + 1, mu, p) : simply_connected_group(t, p);
            else if (isogeny == "so")
                d = so(2 * t.rank, p);
            else if (isogeny == "hspin")
                d = hspin(2 * t.rank, p);
            else
                throw std::domain_error("unknown isogeny " + isogeny);
            return edt::serialize::bound_report_json(best_bound(d)).dump();
        },
        py::arg("type"), py::arg("isogeny") = "adjoint", py::arg("mu") = 0, py::arg("char") = 0);
    m.def(
        "family_bound_json",
        [](const std::string& family, unsigned n, unsigned mu, unsigned p) {
            using namespace edt::edbounds;
            GroupDescriptor d;
            if (family == "PGL") d = pgl(n, p);
            else if (family == "SL") d = sl_quotient(n, mu ? mu : 1, p);
            else if (family == "GL") d = gl_quotient(n, mu ? mu : 1, p);
            else if (family == "Sp") d = sp(2 * n, p);
            else if (family == "PSp") d = psp(2 * n, p);
            else if (family == "SO") d = so(n, p);
            else if (family == "Spin") d = spin(n, p);
            else if (family == "HSpin") d = hspin(n, p);
            else throw std::domain_error("unknown family " + family);
            return edt::serialize::bound_report_json(best_bound(d)).dump();
        },
        py::arg("family"), py::arg("n"), py::arg("mu") = 0, py::arg("char") = 0);
    m.def("coprime_reduce", &edt::edbounds::coprime_reduce);
    m.def("frobenius_bound", [](unsigned n, unsigned p, unsigned e, int eps) {
        auto [mm, v] = edt::edbounds::frobenius_bound(n, p, e, eps);
        return py::make_tuple(mm, v);
    });

    // -- AGL1 verifier
    m.def(
        "agl1_check_json",
        [](unsigned n, unsigned q, unsigned samples, std::uint64_t seed) {
            auto rep = edt::genfree::agl1_generic_check(n, q, samples, seed);
            return edt::serialize::agl1_report_json(rep).dump();
        },
        py::arg("n"), py::arg("q"), py::arg("samples") = 500, py::arg("seed") = 1);
}
