// Python bindings for the core library. Codes, plans and reports cross the
// boundary as plain Python values (ints, lists, dicts) or JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convcode/convert.hpp"
#include "convcode/errors.hpp"
#include "convcode/io.hpp"
#include "convcode/oracle.hpp"

namespace py = pybind11;
using namespace convcode;

namespace {

std::vector<Word> to_rows(const Matrix& m) {
  std::vector<Word> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

ConvertParams params_of(const std::vector<std::pair<std::size_t, std::size_t>>& initial,
                        const std::vector<std::pair<std::size_t, std::size_t>>& final_codes) {
  ConvertParams p;
  for (auto [n, k] : initial) p.initial.push_back({n, k});
  for (auto [n, k] : final_codes) p.final.push_back({n, k});
  p.validate();
  return p;
}

py::object from_json(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::json to_json(const py::object& o) {
  return io::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict bounds_dict(const ConvertParams& p) {
  py::dict d;
  if (p.is_merge()) {
    const MergeBound b = merge_lower_bound(p);
    d["regime"] = "merge";
    d["S"] = classify_s(p);
    d["per_code_reads"] = b.per_code_reads;
    d["read"] = b.read;
    d["write"] = b.write;
    d["total"] = b.total;
  } else if (p.is_split()) {
    const SplitBound b = split_lower_bound(p);
    d["regime"] = "split";
    d["feasible"] = split_feasible(p);
    d["privileged"] = privileged_final(p);
    d["read"] = b.read;
    d["write"] = b.write;
    d["total"] = b.total;
  } else {
    throw UsageError("bounds are defined for t1 = 1 or t2 = 1");
  }
  d["corollary"] = corollary_label(p);
  return d;
}

}  // namespace

PYBIND11_MODULE(_convcode, m) {
  m.doc() = "Convertible MDS codes over finite fields";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<CorruptionError>(m, "CorruptionError", PyExc_ValueError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ZeroDivisionError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint64_t q) { return Field::of_order(q); }), py::arg("q"))
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("modulus", [](const Field& f) { return f.spec().modulus; })
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("pow", &Field::pow)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) { return "Field(" + f.spec().describe() + ")"; });

  py::class_<ExtGrsSpec>(m, "ExtGrsSpec")
      .def(py::init(&ExtGrsSpec::make), py::arg("field"), py::arg("n"), py::arg("r"), py::arg("gamma"),
           py::arg("w"))
      .def_static("standard", &ExtGrsSpec::standard, py::arg("field"), py::arg("n"), py::arg("r"))
      .def_readonly("field", &ExtGrsSpec::field)
      .def_readonly("n", &ExtGrsSpec::n)
      .def_readonly("r", &ExtGrsSpec::r)
      .def_readonly("gamma", &ExtGrsSpec::gamma)
      .def_readonly("w", &ExtGrsSpec::w)
      .def_property_readonly("k", &ExtGrsSpec::k)
      .def("__eq__", [](const ExtGrsSpec& a, const ExtGrsSpec& b) { return a == b; })
      .def("__repr__", [](const ExtGrsSpec& s) {
        return "ExtGrsSpec(q=" + std::to_string(s.field.order()) + ", n=" + std::to_string(s.n) +
               ", r=" + std::to_string(s.r) + ")";
      });

  m.def("parity_check", [](const ExtGrsSpec& s) { return to_rows(parity_check(s)); });
  m.def("generator", [](const ExtGrsSpec& s) { return to_rows(generator(s)); });
  m.def("encode", [](const ExtGrsSpec& s, const Word& msg) { return encode(s, msg); });
  m.def("is_codeword", [](const ExtGrsSpec& s, const Word& v) { return is_codeword(s, v); });
  m.def("recover_erasures", &recover_erasures, py::arg("spec"), py::arg("known"));
  m.def("puncture", [](const ExtGrsSpec& s, const IndexSet& t) { return puncture(s, t); });
  m.def("is_mds", [](const ExtGrsSpec& s) { return oracle::mds_exhaustive(parity_check(s)); });

  m.def(
      "bounds",
      [](const std::vector<std::pair<std::size_t, std::size_t>>& initial,
         const std::vector<std::pair<std::size_t, std::size_t>>& final_codes) {
        return bounds_dict(params_of(initial, final_codes));
      },
      py::arg("initial"), py::arg("final"), "Lower bounds for (n, k) lists of initial and final codes.");

  m.def(
      "build_plan",
      [](const py::object& config) {
        const io::ScenarioConfig cfg = io::config_from_json(to_json(config));
        const Field field =
            Field::of_order(cfg.q ? *cfg.q : Field::smallest_supported_order(io::required_order(cfg)));
        if (cfg.regime == io::ScenarioConfig::Regime::merge)
          return from_json(io::plan_to_json(build_merge(cfg.params, field)));
        return from_json(io::plan_to_json(build_split(cfg.params, field)));
      },
      py::arg("config"), "Build a plan document from a scenario config dict.");

  m.def(
      "initial_codes",
      [](const py::object& plan) {
        const io::Plan p = io::plan_from_json(to_json(plan));
        if (const auto* s = std::get_if<SplitPlan>(&p)) return std::vector<ExtGrsSpec>{s->initial};
        if (const auto* mp = std::get_if<MergePlan>(&p)) return mp->initial;
        return std::get<GeneralPlan>(p).initial;
      },
      py::arg("plan"));

  m.def(
      "convert",
      [](const py::object& plan, const std::vector<Word>& inputs, bool trace) {
        const io::Plan p = io::plan_from_json(to_json(plan));
        std::vector<Word> finals;
        AccessReport report;
        if (const auto* mp = std::get_if<MergePlan>(&p)) {
          auto r = merge_convert(*mp, inputs);
          finals = {r.final_word};
          report = r.report;
        } else if (const auto* s = std::get_if<SplitPlan>(&p)) {
          if (inputs.size() != 1) throw UsageError("split plans take exactly one input codeword");
          auto r = split_convert(*s, inputs.front());
          finals = r.final_words;
          report = r.report;
        } else {
          auto r = general_convert(std::get<GeneralPlan>(p), inputs);
          finals = r.final_words;
          report = r.report;
        }
        return py::make_tuple(finals, from_json(io::report_to_json(report, trace)));
      },
      py::arg("plan"), py::arg("inputs"), py::arg("trace") = false,
      "Run a plan on initial codewords; returns (final codewords, report dict).");

  m.def(
      "verify",
      [](const py::object& plan) {
        const io::Plan p = io::plan_from_json(to_json(plan));
        const StructureCheck c = std::visit(
            [](const auto& x) -> StructureCheck {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, MergePlan>) return verify_optimal_structure(x);
              else if constexpr (std::is_same_v<T, SplitPlan>) return verify_split_structure(x);
              else return verify_general_structure(x);
            },
            p);
        return py::make_tuple(c.ok, c.diagnostic);
      },
      py::arg("plan"), "Structural check of a plan; returns (ok, diagnostic).");
}
