#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbfix/burnside.hpp"
#include "mbfix/engines.hpp"
#include "mbfix/errors.hpp"
#include "mbfix/mbf.hpp"
#include "mbfix/perm.hpp"

namespace py = pybind11;
using namespace mbfix;

namespace {

// Counts cross the boundary as Python ints, through their decimal form.
py::int_ to_py(const BigCount& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(value).c_str(), nullptr, 10));
}

Permutation perm_arg(const std::string& perm, unsigned n) { return parse_cycles(perm, n); }

py::dict report_dict(const Permutation& pi, const MethodReport& r) {
    py::dict d;
    d["n"] = pi.degree();
    d["perm"] = pi.to_string();
    d["cycle_type"] = cycle_type(pi).parts();
    d["mu"] = to_py(class_size(cycle_type(pi)));
    d["count"] = to_py(r.count);
    d["method"] = r.method;
    d["elapsed_ms"] = r.elapsed_ms;
    d["decomposition"] = r.decomposition;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    static py::exception<RefusalError> refusal(m, "RefusalError", PyExc_RuntimeError);
    static py::exception<ConsistencyError> consistency(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const RefusalError& e) {
            refusal(e.what());
        } catch (const ConsistencyError& e) {
            consistency(e.what());
        }
    });

    m.def("dedekind", [](unsigned n) { return to_py(dedekind(n)); }, py::arg("n"));
    m.def("known_dedekind", [](unsigned n) { return to_py(known_dedekind(n)); }, py::arg("n"));

    m.def("generate_dn", [](unsigned n) {
        const FunctionFamily d = generate_dn(n);
        std::vector<std::string> out;
        out.reserve(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) out.push_back(d.function(i).to_string());
        return out;
    }, py::arg("n"));

    m.def("is_monotone", [](const std::string& bits) { return is_monotone(bits); }, py::arg("bits"));

    m.def("cycle_type", [](const std::string& perm, unsigned n) { return cycle_type(perm_arg(perm, n)).parts(); },
          py::arg("perm"), py::arg("n"));
    m.def("class_size", [](const std::string& perm, unsigned n) {
        return to_py(class_size(cycle_type(perm_arg(perm, n))));
    }, py::arg("perm"), py::arg("n"));
    m.def("cycle_poset_size", [](const std::string& perm, unsigned n) {
        return cycle_poset_size(cycle_type(perm_arg(perm, n)));
    }, py::arg("perm"), py::arg("n"));

    m.def("fix_count", [](const std::string& perm, unsigned n, const std::string& method, double budget) {
        const Permutation pi = perm_arg(perm, n);
        const Method chosen = parse_method(method);
        MethodReport r;
        {
            py::gil_scoped_release release;
            r = fix_count(pi, chosen, FixCountOptions{budget});
        }
        return report_dict(pi, r);
    }, py::arg("perm"), py::arg("n"), py::arg("method") = "auto", py::arg("budget") = kDefaultBudget);

    m.def("gen_fix", [](const std::string& perm, unsigned n) {
        const FixSet s = fix_generate(perm_arg(perm, n));
        std::vector<std::string> out;
        out.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.functions.function(i).to_string());
        return out;
    }, py::arg("perm"), py::arg("n"));

    m.def("class_count", [](unsigned n, double budget) {
        BurnsideLedger l;
        {
            py::gil_scoped_release release;
            l = class_count(n, FixCountOptions{budget});
        }
        py::list rows;
        for (const auto& row : l.rows) {
            py::dict d;
            d["cycle_type"] = row.type.parts();
            d["perm"] = row.representative.to_string();
            d["mu"] = to_py(row.mu);
            d["count"] = to_py(row.fix);
            d["method"] = row.method;
            rows.append(d);
        }
        py::dict out;
        out["n"] = l.n;
        out["rows"] = rows;
        out["total"] = to_py(l.total);
        out["r_n"] = to_py(l.r_n);
        return out;
    }, py::arg("n"), py::arg("budget") = kDefaultBudget);

    m.def("verify_tables", [](unsigned n_min, unsigned n_max, double budget) {
        VerifyReport r;
        {
            py::gil_scoped_release release;
            r = verify_published_tables(n_min, n_max, VerifyOptions{budget});
        }
        return py::module_::import("json").attr("loads")(report_to_json(r));
    }, py::arg("n_min"), py::arg("n_max"), py::arg("budget") = kDefaultBudget);
}
