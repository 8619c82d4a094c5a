#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rfa/canonicity.hpp"
#include "rfa/cli.hpp"
#include "rfa/constructions.hpp"
#include "rfa/corpus.hpp"
#include "rfa/language.hpp"
#include "rfa/learner.hpp"
#include "rfa/nfa_io.hpp"
#include "rfa/residual_lattice.hpp"

namespace py = pybind11;
using namespace rfa;

namespace {

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

py::dict verdict(const Nfa& a, const Verdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["witness"] = v.witness ? py::object(py::str(a.alphabet().format(*v.witness))) : py::none();
    return d;
}

py::dict run_dict(const Alphabet& sigma, const RunResult& r) {
    py::dict d;
    d["hypothesis"] = r.hypothesis;
    d["membership_queries"] = r.log.membership_count();
    d["equivalence_queries"] = r.log.equivalence_count();
    d["log"] = r.log.to_text(sigma);
    std::vector<std::string> p, s;
    for (const auto& w : r.prefixes)
        p.push_back(sigma.format(w));
    for (const auto& w : r.suffixes)
        s.push_back(sigma.format(w));
    d["prefixes"] = p;
    d["suffixes"] = s;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Residual finite-state automata: constructions, canonicity checks and learning.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<Nfa>(m, "Nfa")
        .def_property_readonly("size", &Nfa::size)
        .def_property_readonly("alphabet", [](const Nfa& a) { return a.alphabet().tokens(); })
        .def_property_readonly("names", &Nfa::names)
        .def_property_readonly("transition_count", &Nfa::transition_count)
        .def_property_readonly("initial", [](const Nfa& a) { return a.initial().members(); })
        .def_property_readonly("final", [](const Nfa& a) { return a.final_states().members(); })
        .def("accepts", [](const Nfa& a, const std::string& w) { return accepts(a, a.alphabet().parse(w)); },
             py::arg("word"))
        .def("render", &render_nfa)
        .def("to_dot", &to_dot)
        .def("reverse", &reverse)
        .def("__repr__", [](const Nfa& a) {
            std::ostringstream s;
            s << "<Nfa " << a.size() << " states, " << a.transition_count() << " transitions>";
            return s.str();
        });

    m.def("parse_nfa", py::overload_cast<std::string_view>(&parse_nfa), py::arg("text"));
    m.def("load_nfa", &load_nfa, py::arg("path"));

    m.def("g_right", [](const Nfa& a) { return g_right(a).automaton; });
    m.def("g_left", [](const Nfa& a) { return g_left(a).automaton; });
    m.def("f_right", [](const Nfa& a) { return f_right(a).automaton; });
    m.def("f_left", [](const Nfa& a) { return f_left(a).automaton; });
    m.def("denis_residualize", [](const Nfa& a) { return denis_residualize(a).automaton; });
    m.def("canonical_rfa", [](const Nfa& a) { return canonical_rfa(a).automaton; });
    m.def("double_reversal_rfa", [](const Nfa& a) { return double_reversal_rfa(a).automaton; });

    m.def("language_equiv", [](const Nfa& a, const Nfa& b) { return verdict(a, language_equiv(a, b)); });
    m.def("language_includes",
          [](const Nfa& a, const Nfa& b) { return verdict(a, language_includes(a, b)); });
    m.def("isomorphic", &isomorphic);
    m.def("minimal_dfa_size", [](const Nfa& a) { return minimize(determinize(a)).size(); });

    m.def("classify", [](const Nfa& a) {
        const auto c = classify(a);
        py::dict d;
        d["is_rfa"] = c.is_rfa;
        d["is_corfa"] = c.is_corfa;
        d["is_consistent"] = c.is_consistent;
        d["is_strongly_consistent"] = c.is_strongly_consistent;
        return d;
    });
    m.def("check_canonicity",
          [](const Nfa& a) { return json_loads(check_canonicity(a, false).to_json()); });

    m.def(
        "learn",
        [](const Nfa& target, const std::string& algorithm, std::size_t max_rounds) {
            if (algorithm != "nl-star" && algorithm != "nl-qo")
                throw Error("algorithm must be 'nl-star' or 'nl-qo'");
            Teacher t(target);
            LearnerOptions opts;
            opts.max_rounds = max_rounds;
            const auto r = algorithm == "nl-star" ? run_nl_star(t, opts) : run_nl_qo(t, opts);
            return run_dict(target.alphabet(), r);
        },
        py::arg("target"), py::arg("algorithm") = "nl-qo", py::arg("max_rounds") = 0);

    m.def(
        "random_nfa",
        [](std::size_t index, std::size_t max_states, std::size_t alphabet_size, double density,
           std::uint64_t seed) {
            CorpusSpec spec;
            spec.count = index + 1;
            spec.max_states = max_states;
            spec.alphabet_size = alphabet_size;
            spec.transition_density = density;
            spec.seed = seed;
            spec.validate();
            return random_nfa(spec, index);
        },
        py::arg("index"), py::arg("max_states") = 6, py::arg("alphabet_size") = 2,
        py::arg("density") = 0.25, py::arg("seed") = 1);

    m.def(
        "main",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cmd_dispatch(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool; returns (exit code, stdout, stderr).");
}
