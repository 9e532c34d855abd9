#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclemat/action.hpp"
#include "cyclemat/block_spec.hpp"
#include "cyclemat/constructions.hpp"
#include "cyclemat/enumeration.hpp"
#include "cyclemat/io.hpp"
#include "cyclemat/retraction.hpp"
#include "cyclemat/structure.hpp"

namespace py = pybind11;
using namespace cyclemat;

// Python sees matrices as lists of 1-based rows and permutations as 1-based
// image lists.
using Rows = std::vector<std::vector<int>>;

namespace {

CycleMatrix load(const Rows &rows) { return CycleMatrix::from_rows(rows); }

std::vector<int> labels(const std::vector<Label> &v)
{
  std::vector<int> out;
  for (Label l : v)
    out.push_back(l + 1);
  return out;
}

std::vector<std::vector<int>> many(const std::vector<Permutation> &perms)
{
  std::vector<std::vector<int>> out;
  for (auto const &p : perms)
    out.push_back(p.one_based());
  return out;
}

std::vector<Rows> all_rows(const std::vector<CycleMatrix> &ms)
{
  std::vector<Rows> out;
  for (auto const &m : ms)
    out.push_back(m.rows());
  return out;
}

std::optional<std::size_t> as_size(const py::object &o)
{
  if (o.is_none())
    return std::nullopt;
  return o.cast<std::size_t>();
}

std::optional<bool> as_flag(const py::object &o)
{
  if (o.is_none())
    return std::nullopt;
  return o.cast<bool>();
}

DedupMode mode_of(const std::string &mode)
{
  if (mode == "auto")
    return DedupMode::Automatic;
  if (mode == "keys")
    return DedupMode::CanonicalKeys;
  if (mode == "orderly")
    return DedupMode::Orderly;
  throw std::invalid_argument("mode must be auto, keys or orderly");
}

} // namespace

PYBIND11_MODULE(_cyclemat, m)
{
  m.doc() = "Cycle matrices: validation, isomorphism, constructions and enumeration";

  m.def("parse_matrix", [](const std::string &text) { return parse_matrix(text).rows(); },
        py::arg("text"), "Text (n, then n rows) or JSON ({\"n\", \"rows\"}) matrix.");
  m.def("format_matrix", [](const Rows &rows) { return format_matrix(Matrix::from_rows(rows)); },
        py::arg("rows"));

  m.def("validate", [](const Rows &rows) {
    auto r = validate(rows);
    py::dict d;
    d["valid"] = r.valid;
    if (r.violation) {
      d["axiom"] = to_string(r.violation->axiom);
      d["witness"] = r.violation->witness;
    }
    return d;
  }, py::arg("rows"));

  m.def("canonical_form", [](const Rows &rows) {
    auto c = canonical_form(load(rows));
    return py::make_tuple(c.matrix.rows(), c.labeling.one_based());
  }, py::arg("rows"), "Lexicographically least relabeling and the labeling achieving it.");

  m.def("act", [](const std::vector<int> &sigma, const Rows &rows) {
    return act(Permutation::from_images(sigma), load(rows)).rows();
  }, py::arg("sigma"), py::arg("rows"));

  m.def("are_isomorphic", [](const Rows &a, const Rows &b) -> std::optional<std::vector<int>> {
    auto s = are_isomorphic(load(a), load(b));
    if (!s)
      return std::nullopt;
    return s->one_based();
  }, py::arg("a"), py::arg("b"));

  m.def("automorphisms", [](const Rows &rows) { return many(automorphisms(load(rows))); },
        py::arg("rows"));

  m.def("retract", [](const Rows &rows) {
    auto r = retract_once(load(rows));
    return py::make_tuple(r.quotient.rows(), labels(r.class_map));
  }, py::arg("rows"), "One retraction step: quotient and class map.");

  m.def("multipermutation_level", [](const Rows &rows) { return multipermutation_level(load(rows)); },
        py::arg("rows"));

  m.def("point_orbits", [](const Rows &rows) {
    std::vector<std::vector<int>> out;
    for (auto const &o : point_orbits(load(rows)))
      out.push_back(labels(o));
    return out;
  }, py::arg("rows"));

  m.def("determinant", [](const Rows &rows) {
    return py::int_(py::str(determinant(load(rows)).str()));
  }, py::arg("rows"));

  m.def("is_transpose", [](const Rows &rows) { return is_transpose_cycle_matrix(load(rows)); },
        py::arg("rows"));

  m.def("trivial_solution", [](std::size_t n) { return trivial_solution(n).rows(); }, py::arg("n"));
  m.def("permutation_solution", [](const std::vector<int> &sigma) {
    return permutation_solution(Permutation::from_images(sigma)).rows();
  }, py::arg("sigma"));
  m.def("multiperm_tower", [](std::size_t height) { return multiperm_tower(height).rows(); },
        py::arg("m"));
  m.def("tensor", [](const Rows &a, const Rows &b) { return tensor(load(a), load(b)).rows(); },
        py::arg("a"), py::arg("b"));
  m.def("build_json", [](const std::string &spec) {
    return build_from_spec(nlohmann::json::parse(spec)).rows();
  }, py::arg("spec"), "Matrix described by a construction spec given as JSON text.");

  m.def("enumerate_raw", [](std::size_t n) { return all_rows(enumerate_raw(n)); }, py::arg("n"));

  m.def("enumerate_classes", [](std::size_t n, std::size_t jobs, const std::string &mode) {
    auto dedup = mode_of(mode);
    std::vector<CycleMatrix> classes;
    {
      py::gil_scoped_release release;
      classes = enumerate_classes(n, jobs, dedup).classes;
    }
    return all_rows(classes);
  }, py::arg("n"), py::arg("jobs") = 1, py::arg("mode") = "auto");

  m.def("census_json", [](std::size_t n, const py::object &square_free,
                          const py::object &indecomposable, const py::object &transpose,
                          const py::object &max_level, const py::object &permutation_only,
                          std::size_t jobs, const std::string &mode) {
    EnumFilter f;
    f.square_free = as_flag(square_free);
    f.indecomposable = as_flag(indecomposable);
    f.transpose = as_flag(transpose);
    f.max_level = as_size(max_level);
    f.permutation_only = as_flag(permutation_only);
    auto dedup = mode_of(mode);
    py::gil_scoped_release release;
    return census(n, f, jobs, dedup).to_json().dump();
  }, py::arg("n"), py::arg("square_free") = py::none(), py::arg("indecomposable") = py::none(),
     py::arg("transpose") = py::none(), py::arg("max_level") = py::none(),
     py::arg("permutation_only") = py::none(), py::arg("jobs") = 1,
     py::arg("mode") = "auto");
}
