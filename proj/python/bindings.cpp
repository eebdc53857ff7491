#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nchilbert/cli.hpp"
#include "nchilbert/errors.hpp"
#include "nchilbert/schur.hpp"
#include "nchilbert/series.hpp"

namespace py = pybind11;
using namespace nchilbert;

namespace {

ComputationRequest make_request(const std::string& text, bool multigraded, std::optional<unsigned> truncate,
                                std::optional<unsigned> degree_bound, bool affine, bool schur,
                                std::size_t max_orbit) {
    if (truncate && degree_bound) throw Error(ErrorKind::invalid_mode, "truncate and degree_bound exclude each other");
    const cli::InputFile in = cli::parse_input(text);
    ComputationRequest req;
    req.alphabet = in.alphabet;
    req.generators = in.generators;
    req.kind = in.kind;
    if (truncate) req.mode = TruncateMode{*truncate};
    if (degree_bound) req.mode = DegreeBoundMode{*degree_bound};
    req.multigraded = multigraded;
    req.affine = affine;
    req.schur = schur;
    req.max_orbit = max_orbit;
    return req;
}

py::object to_int(const mpz_class& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hilbert series of monomial algebras in noncommuting variables";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error)(e.what(), to_string(e.kind()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    // JSON text in the same schema as `nchilbert --json`.
    m.def(
        "compute_json",
        [](const std::string& text, bool multigraded, std::optional<unsigned> truncate,
           std::optional<unsigned> degree_bound, bool affine, bool schur, std::optional<unsigned> oracle,
           std::size_t max_orbit) {
            const ComputationRequest req =
                make_request(text, multigraded, truncate, degree_bound, affine, schur, max_orbit);
            ComputationResult res;
            OracleTable table;
            {
                py::gil_scoped_release release;
                res = hilbert_series(req);
                if (oracle) {
                    ComputationRequest oreq = req;
                    oreq.mode = TruncateMode{*oracle};
                    table = normal_words_oracle(oreq);
                }
            }
            return cli::render_json({&req, &res, oracle, oracle ? &table : nullptr}).dump();
        },
        py::arg("text"), py::arg("multigraded") = false, py::arg("truncate") = py::none(),
        py::arg("degree_bound") = py::none(), py::arg("affine") = false, py::arg("schur") = false,
        py::arg("oracle") = py::none(), py::arg("max_orbit") = default_max_orbit);

    m.def(
        "normal_words",
        [](const std::string& text, unsigned degree) {
            ComputationRequest req = make_request(text, true, degree, std::nullopt, false, false, default_max_orbit);
            OracleTable table;
            {
                py::gil_scoped_release release;
                table = normal_words_oracle(req);
            }
            py::dict out;
            for (const auto& [deg, count] : table) out[py::tuple(py::cast(deg.counts))] = count;
            return out;
        },
        py::arg("text"), py::arg("degree"), "Normal words of degree <= degree, counted per multidegree.");

    m.def(
        "schur_polynomial",
        [](const std::vector<std::uint32_t>& parts, std::size_t n) {
            const MPoly p = nchilbert::schur_polynomial(Partition(parts), n);
            py::dict out;
            for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = to_int(c.get_num());
            return out;
        },
        py::arg("partition"), py::arg("n"), "Exponent tuple -> coefficient.");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Command line front end; returns (exit code, stdout, stderr).");
}
