#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rampkit/designs.hpp"
#include "rampkit/ramp.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rampkit;

namespace {

template <typename Array>
std::vector<std::vector<Symbol>> rows_of(const Array& a) {
  std::vector<std::vector<Symbol>> out;
  for (std::size_t i = 0; i < a.num_rows(); ++i) out.emplace_back(a.row(i).begin(), a.row(i).end());
  return out;
}

std::vector<std::vector<Repr>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<Repr>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

NonexistenceKind kind_from(const std::string& name) {
  if (name == "thm48") return NonexistenceKind::ShamirOddOrder;
  if (name == "thm410") return NonexistenceKind::DualRs;
  throw ParameterError("unknown construction `" + name + "`; expected thm48 or thm410");
}

ShareBundle bundle_from(const std::map<std::size_t, Symbol>& shares) {
  ShareBundle b;
  for (const auto& [player, share] : shares) b.add(player, share);
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthogonal arrays, augmented orthogonal arrays and ideal ramp schemes over finite fields";

  auto base = py::register_exception<Error>(m, "RampkitError");
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Field>(m, "Field")
      .def(py::init(&Field::make), "p"_a, "j"_a = 1)
      .def_static("of_order", &Field::of_order, "q"_a)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("reducing_poly", &Field::reducing_poly)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("elements", [](const Field& f) {
        std::vector<Repr> out;
        for (const auto& e : f.elements()) out.push_back(e.repr());
        return out;
      })
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", &Field::name);

  py::class_<Matrix>(m, "Matrix")
      .def(py::init<Field, const std::vector<std::vector<Repr>>&>(), "field"_a, "rows"_a)
      .def_property_readonly("field", &Matrix::field)
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def("to_list", &matrix_rows)
      .def("transpose", &Matrix::transpose)
      .def("to_text", [](const Matrix& x) { return to_text(x); })
      .def_static("from_text", &matrix_from_text)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; });

  m.def("rank", &rank);
  m.def("columns_independent", [](const Matrix& x, const std::vector<std::size_t>& idx) { return columns_independent(x, idx); });
  m.def("row_space", [](const Matrix& x) { return row_space(x); });

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("max_cells", &Limits::max_cells)
      .def_readwrite("max_subsets", &Limits::max_subsets);

  py::class_<OrthogonalArray>(m, "OrthogonalArray")
      .def(py::init<unsigned, std::size_t, std::uint32_t, std::vector<std::vector<Symbol>>>(), "t"_a, "k"_a, "v"_a, "rows"_a)
      .def_property_readonly("t", &OrthogonalArray::t)
      .def_property_readonly("k", &OrthogonalArray::k)
      .def_property_readonly("v", &OrthogonalArray::v)
      .def_property_readonly("rows", &rows_of<OrthogonalArray>)
      .def("__len__", &OrthogonalArray::num_rows)
      .def("to_text", [](const OrthogonalArray& a) { return to_text(a); })
      .def("__eq__", [](const OrthogonalArray& a, const OrthogonalArray& b) { return a == b; });

  py::class_<AugmentedOA>(m, "AugmentedOA")
      .def(py::init<unsigned, unsigned, std::size_t, std::uint32_t, std::vector<std::vector<Symbol>>>(), "s"_a, "t"_a,
           "k"_a, "v"_a, "rows"_a)
      .def_property_readonly("s", &AugmentedOA::s)
      .def_property_readonly("t", &AugmentedOA::t)
      .def_property_readonly("k", &AugmentedOA::k)
      .def_property_readonly("v", &AugmentedOA::v)
      .def_property_readonly("rows", &rows_of<AugmentedOA>)
      .def("__len__", &AugmentedOA::num_rows)
      .def("to_text", [](const AugmentedOA& a) { return to_text(a); })
      .def("__eq__", [](const AugmentedOA& a, const AugmentedOA& b) { return a == b; });

  m.def("array_from_text", [](const std::string& text) -> py::object {
    auto parsed = array_from_text(text);
    if (auto* oa = std::get_if<OrthogonalArray>(&parsed)) return py::cast(std::move(*oa));
    return py::cast(std::get<AugmentedOA>(std::move(parsed)));
  });

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("ok", &Verdict::ok)
      .def_property_readonly("message", [](const Verdict& v) { return v.failure ? v.failure->message : std::string(); })
      .def_property_readonly("columns",
                             [](const Verdict& v) { return v.failure ? v.failure->columns : std::vector<std::size_t>{}; })
      .def_property_readonly("tuple", [](const Verdict& v) { return v.failure ? v.failure->tuple : std::vector<Symbol>{}; })
      .def("__bool__", [](const Verdict& v) { return v.ok; });

  m.def("verify_oa", &verify_oa, "array"_a, "limits"_a = Limits{});
  m.def("verify_mds", &verify_mds, "array"_a);
  m.def("verify_aoa", &verify_aoa, "array"_a, "limits"_a = Limits{});

  m.def("rs_generator", &rs_generator, "field"_a, "t"_a);
  m.def("oa_from_generator", &oa_from_generator, "generator"_a, "t"_a, "limits"_a = Limits{});
  m.def("aoa_merge", &aoa_merge, "array"_a, "s"_a, "limits"_a = Limits{});
  m.def(
      "aoa_split",
      [](const AugmentedOA& a, const Limits& limits) {
        auto r = aoa_split(a, limits);
        py::object relation = r.relation ? py::cast(r.relation->describe()) : py::none();
        return py::make_tuple(std::move(r.array), std::move(r.verdict), relation);
      },
      "array"_a, "limits"_a = Limits{}, "Returns (array, verdict, relation description or None).");
  m.def("linear_aoa", &linear_aoa, "matrix"_a, "s"_a, "t"_a, "k"_a, "limits"_a = Limits{});
  m.def("shamir_matrix", &shamir_matrix, "field"_a, "s"_a, "t"_a, "k"_a);
  m.def("dual_aoa", &dual_aoa, "n"_a, "s"_a, "t"_a, "limits"_a = Limits{});
  m.def("example_aoa_1333", &example_aoa_1333);

  py::class_<BoundVerdict>(m, "BoundVerdict")
      .def_readonly("max_k", &BoundVerdict::max_k)
      .def_readonly("case_label", &BoundVerdict::case_label)
      .def_property_readonly("status", [](const BoundVerdict& b) {
        return b.status == BoundStatus::Proven ? "proven" : "conjectured";
      });
  m.def("bush_bound", &bush_bound, "t"_a, "v"_a);
  m.def("mds_max", &mds_max, "t"_a, "q"_a);

  py::class_<NonexistenceReport>(m, "NonexistenceReport")
      .def_readonly("generator", &NonexistenceReport::generator)
      .def_readonly("aoa", &NonexistenceReport::aoa)
      .def_readonly("verification", &NonexistenceReport::verification)
      .def_readonly("oa_strength", &NonexistenceReport::oa_strength)
      .def_readonly("oa_columns", &NonexistenceReport::oa_columns)
      .def_readonly("bound", &NonexistenceReport::bound)
      .def_property_readonly("certified", &NonexistenceReport::certified);
  m.def(
      "nonexistence_witness",
      [](const std::string& kind, std::uint64_t q, unsigned param, const Limits& limits) {
        return nonexistence_witness(kind_from(kind), q, param, limits);
      },
      "kind"_a, "q"_a, "param"_a, "limits"_a = Limits{});

  py::class_<RampScheme>(m, "RampScheme")
      .def_property_readonly("s", &RampScheme::s)
      .def_property_readonly("t", &RampScheme::t)
      .def_property_readonly("n", &RampScheme::n)
      .def_property_readonly("v", &RampScheme::v)
      .def_property_readonly("secrets", &RampScheme::secrets)
      .def_property_readonly("num_rules", [](const RampScheme& s) { return s.rules().size(); })
      .def_property_readonly("ideal", &RampScheme::ideal)
      .def("__eq__", [](const RampScheme& a, const RampScheme& b) { return a == b; });

  m.def("scheme_from_aoa", &scheme_from_aoa, "array"_a, "limits"_a = Limits{});
  m.def("scheme_shamir", &scheme_shamir, "field"_a, "s"_a, "t"_a, "n"_a);
  m.def(
      "deal", [](const RampScheme& s, const Secret& secret, std::uint64_t seed) { return deal(s, secret, seed).shares(); },
      "scheme"_a, "secret"_a, "seed"_a);
  m.def(
      "reconstruct",
      [](const RampScheme& s, const std::map<std::size_t, Symbol>& shares) -> py::object {
        const auto r = reconstruct(s, bundle_from(shares));
        if (r.status == Reconstruction::Status::Recovered) return py::cast(r.secret);
        if (r.status == Reconstruction::Status::Ambiguous)
          throw Error("scheme corrupt: shares match several secrets");
        return py::none();
      },
      "scheme"_a, "shares"_a, "Returns the secret, or None when no rule matches the shares.");

  py::class_<AuditReport>(m, "AuditReport")
      .def_readonly("weak", &AuditReport::weak)
      .def_readonly("perfect", &AuditReport::perfect)
      .def_readonly("equal_counts", &AuditReport::equal_counts)
      .def_readonly("bijection", &AuditReport::bijection)
      .def_readonly("views", &AuditReport::views)
      .def_property_readonly("passed", &AuditReport::passed)
      .def_property_readonly("finding",
                             [](const AuditReport& r) { return r.finding ? r.finding->message : std::string(); });
  m.def("audit_security", &audit_security, "scheme"_a, "max_work"_a = kDefaultMaxCells);
  m.def("aoa_from_scheme", &aoa_from_scheme, "scheme"_a);
  m.def(
      "ideal_bound_check",
      [](unsigned s, unsigned t, std::size_t n, std::uint64_t v, std::uint64_t count) {
        const auto b = ideal_bound_check(s, t, n, v, count);
        return py::dict("bound"_a = b.bound, "ok"_a = b.ok, "ideal"_a = b.ideal);
      },
      "s"_a, "t"_a, "n"_a, "v"_a, "secret_count"_a);
}
