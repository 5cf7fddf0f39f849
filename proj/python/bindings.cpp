#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "midy/midy.hpp"
#include "midy/modular.hpp"
#include "midy/primes.hpp"
#include "midy/record.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string form.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!src || PyBool_Check(src.ptr()) || !PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) {
            PyErr_Clear();
            return false;
        }
        return value.set_str(text.cast<std::string>(), 10) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace midy;

std::string verdict_json(const MidyVerdict& v) { return to_json(v).dump(); }

}  // namespace

PYBIND11_MODULE(_midy, m) {
    m.doc() = "Exact beta-expansions, the Midy property and golden-base prime classification";

    static py::exception<Error> midy_error(m, "MidyError", PyExc_RuntimeError);
    static py::exception<Error> cap_error(m, "CapExhausted", midy_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            switch (e.kind()) {
                case ErrorKind::invalid_input: PyErr_SetString(PyExc_ValueError, e.what()); return;
                case ErrorKind::cap_exhausted: py::set_error(cap_error, e.what()); return;
                default: py::set_error(midy_error, e.what()); return;
            }
        }
    });

    py::class_<BetaBase>(m, "Base")
        .def_property_readonly("degree", &BetaBase::degree)
        .def_property_readonly("coeffs", &BetaBase::coeffs)
        .def_property_readonly("digit_max", &BetaBase::digit_max)
        .def_property_readonly("is_unit", &BetaBase::is_unit)
        .def_property_readonly("pisot", [](const BetaBase& b) { return to_string(b.pisot()); })
        .def_property_readonly("purity", [](const BetaBase& b) { return to_string(b.purity()); })
        .def_property_readonly("polynomial", &BetaBase::polynomial_string)
        .def_property_readonly("id", &BetaBase::id)
        .def("__eq__", &BetaBase::operator==)
        .def("__repr__", [](const BetaBase& b) { return "Base(" + b.polynomial_string() + ")"; });

    m.def("make_base", [](const std::vector<BigInt>& c) { return BetaBase::make(c); }, py::arg("coeffs"),
          "Base from low-to-high coefficients c0..c_{d-1} of X^d - c_{d-1}X^{d-1} - ... - c0.");
    m.def("make_base", [](const std::string& text) { return parse_base(text); }, py::arg("text"));
    m.def("golden", &bases::golden);
    m.def("tribonacci", &bases::tribonacci);
    m.def("tetranacci", &bases::tetranacci);

    py::class_<Expansion>(m, "Expansion")
        .def_property_readonly("integer_part", [](const Expansion& e) { return format_digits(e.integer_part); })
        .def_property_readonly("preperiod", [](const Expansion& e) { return format_digits(e.preperiod); })
        .def_property_readonly("period", [](const Expansion& e) { return format_digits(e.period); })
        .def_property_readonly("period_digits", [](const Expansion& e) { return e.period; })
        .def_readonly("truncated", &Expansion::truncated)
        .def_property_readonly("purely_periodic", &Expansion::purely_periodic)
        .def("to_json", [](const Expansion& e) { return to_json(e).dump(); })
        .def("__str__", &Expansion::to_string)
        .def("__repr__", [](const Expansion& e) { return "Expansion(" + e.to_string() + ")"; });

    m.def(
        "expand",
        [](const BigInt& p, const BigInt& q, const BetaBase& base, std::size_t max_digits) {
            if (q <= 0) fail(ErrorKind::invalid_input, "denominator must be positive");
            if (p < 0) fail(ErrorKind::invalid_input, "value must be non-negative");
            Rational x(p, q);
            x.canonicalize();
            py::gil_scoped_release unlocked;
            return greedy_expand(x, base, max_digits);
        },
        py::arg("p"), py::arg("q") = BigInt(1), py::arg("base") = bases::golden(),
        py::arg("max_digits") = kDefaultOrbitCap, "Greedy beta-expansion of p/q.");

    py::class_<MidyVerdict>(m, "Verdict")
        .def_property_readonly("decision", [](const MidyVerdict& v) { return to_string(v.decision); })
        .def_property_readonly("rule", [](const MidyVerdict& v) { return to_string(v.rule); })
        .def_property_readonly("testifying_p", [](const MidyVerdict& v) { return v.certificate.testifying_p; })
        .def_property_readonly("exponent", [](const MidyVerdict& v) { return v.certificate.exponent; })
        .def_property_readonly("period_length", [](const MidyVerdict& v) { return v.certificate.period_length; })
        .def_property_readonly("halves_sum", [](const MidyVerdict& v) -> std::optional<std::string> {
            if (!v.certificate.halves_sum_digits) return std::nullopt;
            return format_digits(*v.certificate.halves_sum_digits);
        })
        .def_readonly("note", &MidyVerdict::note)
        .def("to_json", &verdict_json)
        .def("__repr__", [](const MidyVerdict& v) {
            return "Verdict(" + to_string(v.decision) + ", " + to_string(v.rule) + ")";
        });

    m.def("midy_by_definition", &midy_by_definition, py::arg("p"), py::arg("q"), py::arg("base") = bases::golden(),
          py::arg("cap") = kDefaultOrbitCap, py::call_guard<py::gil_scoped_release>());
    m.def("midy_try_all_p", &midy_try_all_p, py::arg("q"), py::arg("base"), py::arg("cap") = kDefaultOrbitCap,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "midy_by_complement",
        [](const BigInt& p, const BigInt& q, const BetaBase& base, std::size_t cap) {
            ComplementResult r;
            {
                py::gil_scoped_release unlocked;
                r = midy_by_complement(p, q, base, cap);
            }
            py::dict d;
            d["status"] = r.status == ComplementStatus::found    ? "found"
                          : r.status == ComplementStatus::absent ? "absent"
                                                                 : "cap-exhausted";
            d["exponent"] = r.exponent;
            d["steps"] = r.steps;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("base") = bases::golden(), py::arg("cap") = kDefaultOrbitCap);
    m.def("necessary_condition", &necessary_condition, py::arg("q"), py::arg("base") = bases::golden(),
          "Least N with C^N = -I mod q, or None.", py::call_guard<py::gil_scoped_release>());
    m.def("midy_tau", &midy_tau, py::arg("q"), py::arg("verify_bound") = kVerificationBound,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "classify_prime",
        [](const BigInt& q, bool force) {
            RuleTrace t;
            {
                py::gil_scoped_release unlocked;
                t = classify_prime(q, force);
            }
            py::list steps;
            for (const auto& s : t.steps) steps.append(py::make_tuple(to_string(s.rule), s.inputs, s.outcome));
            return py::make_tuple(t.verdict, steps);
        },
        py::arg("q"), py::arg("force") = false, "Returns (verdict, [(rule, inputs, outcome), ...]).");
    m.def("entry_point", &entry_point, py::arg("m"), "Least k >= 1 with m | F_k.");
    m.def(
        "fib_pair_mod",
        [](const BigInt& n, const BigInt& mod) {
            FibPair f = fib_pair_mod(n, mod);
            return py::make_tuple(f.value, f.next);
        },
        py::arg("n"), py::arg("m"), "(F_n mod m, F_{n+1} mod m).");
    m.def("legendre", &legendre, py::arg("a"), py::arg("q"));
}
