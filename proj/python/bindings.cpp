#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>

#include "partgen/analysis.hpp"
#include "partgen/counting.hpp"
#include "partgen/errors.hpp"
#include "partgen/generate.hpp"
#include "partgen/ptree.hpp"

namespace py = pybind11;
using namespace partgen;

namespace {

// One memo table shared by every call from Python.
CountContext& shared_ctx() {
  static CountContext ctx;
  return ctx;
}

py::int_ to_py(const BigCount& b) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(b.str().c_str(), nullptr, 10)));
}

Algorithm to_alg(int version) {
  if (version < 1 || version > 3) throw DomainError("version must be 1, 2 or 3");
  return static_cast<Algorithm>(version);
}

py::dict counters_dict(const OpCounters& c) {
  py::dict d;
  d["assignments"] = c.assignments;
  d["bool_evals"] = c.bool_evals;
  d["visits"] = c.visits;
  d["outer_iterations"] = c.outer_iterations;
  d["middle_iterations"] = c.middle_iterations;
  d["pair_iterations"] = c.pair_iterations;
  return d;
}

py::tuple ratio_tuple(const ExactRatio& r) { return py::make_tuple(to_py(r.num), to_py(r.den)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integer partitions as ascending compositions";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

  m.def("partition_count", [](std::uint64_t n) { return to_py(partition_count(shared_ctx(), n)); },
        py::arg("n"));
  m.def("restricted_count",
        [](std::uint64_t n, std::uint64_t min_part) {
          return to_py(restricted_count(shared_ctx(), n, min_part));
        },
        py::arg("n"), py::arg("min_part"));
  m.def("ratio_count",
        [](std::uint64_t n, std::uint64_t t, std::uint64_t min_part) {
          return to_py(ratio_restricted_count(shared_ctx(), n, min_part, t));
        },
        py::arg("n"), py::arg("t"), py::arg("min_part") = 1);

  m.def("compositions",
        [](std::uint64_t n, int version, std::optional<std::uint64_t> limit) {
          py::list out;
          if (limit && *limit == 0) return out;
          generate(to_alg(version), n, [&](CompositionView c) {
            py::list parts;
            for (Part x : c) parts.append(x);
            out.append(std::move(parts));
            return !limit || out.size() < *limit;
          });
          return out;
        },
        py::arg("n"), py::arg("version") = 3, py::arg("limit") = py::none(),
        "Ascending compositions of n in lexicographic order.");
  m.def("for_each_composition",
        [](std::uint64_t n, const std::function<py::object(py::tuple)>& fn, int version) {
          return generate(to_alg(version), n, [&](CompositionView c) {
            py::tuple parts(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) parts[i] = py::int_(c[i]);
            const py::object r = fn(std::move(parts));
            return r.is_none() || r.cast<bool>();
          });
        },
        py::arg("n"), py::arg("fn"), py::arg("version") = 3,
        "Calls fn(parts) for each composition; a falsy non-None return stops. "
        "Returns the number of calls.");

  m.def("op_counts",
        [](std::uint64_t n, int version) {
          auto noop = [](CompositionView) {};
          if (version == 2) return counters_dict(gen_v2_counted(n, noop));
          if (version == 3) return counters_dict(gen_v3_counted(n, noop));
          throw DomainError("op_counts supports versions 2 and 3");
        },
        py::arg("n"), py::arg("version"));
  m.def("check_op_counts",
        [](std::uint64_t n, int version) {
          if (version == 2) return verify_v2_counts(shared_ctx(), n).passed;
          if (version == 3) return verify_v3_counts(shared_ctx(), n).passed;
          throw DomainError("check_op_counts supports versions 2 and 3");
        },
        py::arg("n"), py::arg("version"));

  m.def("r1_exact", [](std::uint64_t n) { return ratio_tuple(r1(shared_ctx(), n)); }, py::arg("n"));
  m.def("r2_exact", [](std::uint64_t n) { return ratio_tuple(r2(shared_ctx(), n)); }, py::arg("n"));

  m.def("tree_dot",
        [](std::uint64_t n, const std::string& kind) {
          if (kind == "partition") return to_dot(build_partition_tree(n));
          if (kind == "binary") return to_dot(build_strict_tree(n));
          throw DomainError("kind must be 'partition' or 'binary'");
        },
        py::arg("n"), py::arg("kind") = "binary");
  m.def("decode_path",
        [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& path) {
          std::vector<Node> nodes;
          for (auto [x, y] : path) nodes.push_back({x, y});
          return decode_path(nodes);
        },
        py::arg("path"));

  m.def("verify",
        [](std::uint64_t max_n) {
          const VerificationReport rep = run_verification(shared_ctx(), max_n);
          py::list out;
          for (const auto& c : rep.checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
          return out;
        },
        py::arg("max_n") = 30);
}
