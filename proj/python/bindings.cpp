#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pcond/blocks.hpp"
#include "pcond/cli.hpp"
#include "pcond/errors.hpp"
#include "pcond/gendec.hpp"
#include "pcond/isometry.hpp"
#include "pcond/tables.hpp"
#include "pcond/verify.hpp"

namespace py = pybind11;
using namespace pcond;

namespace {

std::vector<std::string> strings(const std::vector<CycloNum>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

py::list conductors(const GroupDataset& ds, std::optional<std::int64_t> p) {
    py::list out;
    for (int i = 0; i < ds.table->num_irr(); ++i) {
        auto chi = ClassFunction::irreducible(ds.table, i);
        if (p)
            out.append(py::make_tuple(char_conductor(chi), char_conductor(chi, *p)));
        else
            out.append(char_conductor(chi));
    }
    return out;
}

py::list blocks(const GroupDataset& ds, std::int64_t p) {
    py::list out;
    for (const auto& b : partition_blocks(*ds.table, *ds.prime_data(p).brauer)) {
        py::dict d;
        d["id"] = b.id;
        d["defect"] = b.defect;
        d["irr"] = b.irr;
        d["ibr"] = b.ibr;
        out.append(d);
    }
    return out;
}

py::list gendec(const DatasetPtr& ds, std::int64_t p) {
    py::list out;
    auto gm = gendec_all(ds, p);
    for (const auto& s : gm.sections) {
        py::dict d;
        d["u"] = ds->table->classes[s.u_class].name;
        d["order"] = s.u_order;
        py::list rows;
        for (const auto& row : s.d) rows.append(strings(row));
        d["d"] = rows;
        out.append(d);
    }
    return out;
}

py::list verify(const DatasetPtr& ds, std::int64_t p, std::uint64_t seed) {
    auto gm = gendec_all(ds, p);
    py::list out;
    for (const auto& r : {gendec_conductor_report(gm, seed), max_entry_report(gm), projective_report(gm), gendec_report(gm),
                          check_restriction_props(gm)}) {
        py::dict d;
        d["check"] = r.check_name;
        d["status"] = r.status;
        d["pass"] = r.pass();
        d["records"] = r.records.size();
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_pcond, m) {
    m.doc() = "pcond core bindings";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);

    py::class_<CycloNum>(m, "CycloNum")
        .def(py::init<long>(), py::arg("value") = 0)
        .def(py::init([](const std::string& s) { return parse_cyclo(s); }))
        .def_static("root_of_unity", &CycloNum::root_of_unity, py::arg("n"), py::arg("e") = 1)
        .def_property_readonly("order", &CycloNum::order)
        .def("galois", &CycloNum::galois)
        .def("conj", &CycloNum::conj)
        .def("inverse", &CycloNum::inverse)
        .def("is_algebraic_integer", &CycloNum::is_algebraic_integer)
        .def("is_rational", &CycloNum::is_rational)
        .def("conductor", [](const CycloNum& x) { return conductor(x); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__hash__", [](const CycloNum& x) { return py::hash(py::str(x.to_string())); })
        .def("__str__", &CycloNum::to_string)
        .def("__repr__", [](const CycloNum& x) { return "CycloNum('" + x.to_string() + "')"; });

    m.def("parse_cyclo", [](const std::string& s) { return parse_cyclo(s); });
    m.def("conductor", [](const std::vector<CycloNum>& v) { return conductor(v); });

    py::class_<GroupDataset, std::shared_ptr<GroupDataset>>(m, "Dataset")
        .def_property_readonly("name", &GroupDataset::name)
        .def_property_readonly("order", [](const GroupDataset& ds) { return ds.table->group_order; })
        .def_property_readonly("primes", &GroupDataset::relevant_primes)
        .def_property_readonly("class_names",
                               [](const GroupDataset& ds) {
                                   std::vector<std::string> out;
                                   for (const auto& c : ds.table->classes) out.push_back(c.name);
                                   return out;
                               })
        .def_property_readonly("degrees",
                               [](const GroupDataset& ds) {
                                   std::vector<std::int64_t> out;
                                   for (int i = 0; i < ds.table->num_irr(); ++i) out.push_back(ds.table->degree(i));
                                   return out;
                               })
        .def("character", [](const GroupDataset& ds, int i) { return strings(ds.table->irreducibles.at(i)); })
        .def("conductors", &conductors, py::arg("p") = std::nullopt)
        .def("blocks", &blocks)
        .def("gendec", [](const std::shared_ptr<GroupDataset>& ds, std::int64_t p) { return gendec(ds, p); })
        .def("verify", [](const std::shared_ptr<GroupDataset>& ds, std::int64_t p,
                          std::uint64_t seed) { return verify(ds, p, seed); },
             py::arg("p"), py::arg("seed") = 0);

    m.def("load_dataset", [](const std::string& path) {
        return std::const_pointer_cast<GroupDataset>(load_dataset(path));
    });

    m.def(
        "search_perfect_isometries",
        [](const GroupDataset& a, std::int64_t p, int block, const GroupDataset& b, std::optional<std::int64_t> q,
           int target_block, int bound) {
            auto found = search_perfect_isometries(block_ref(a, p, block), block_ref(b, q.value_or(p), target_block),
                                                   SearchOptions{bound, 0});
            py::list out;
            for (const auto& c : found) out.append(py::make_tuple(c.permutation, c.signs));
            return out;
        },
        py::arg("source"), py::arg("p"), py::arg("block") = 0, py::arg("target"), py::arg("q") = std::nullopt,
        py::arg("target_block") = 0, py::arg("bound") = 6);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run the command-line front end; returns (exit code, stdout, stderr).");
}
