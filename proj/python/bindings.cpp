#include "eiscoh/acceptance.hpp"
#include "eiscoh/hecke.hpp"
#include "eiscoh/periods.hpp"
#include "eiscoh/recognition.hpp"
#include "eiscoh/sczech.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace eiscoh;

namespace {

struct Value {
  std::string re, im;
  std::optional<std::string> recognized;
  std::optional<std::string> residual;
};

const Int kHeight(1000000);

Value make_value(const Complex& z, int bits, const RecognitionResult* r = nullptr) {
  Value v{to_decimal(z.re, decimal_digits(bits)), to_decimal(z.im, decimal_digits(bits)), std::nullopt, std::nullopt};
  if (r && r->ok()) {
    v.recognized = r->str();
    v.residual = to_decimal(r->residual, 6);
  }
  return v;
}

PrecisionContext context(int bits) {
  if (bits < 128) throw Error(ErrorKind::Usage, "bits must be at least 128");
  return PrecisionContext(bits);
}

Field field_for(long label) {
  long d = normalize_discriminant(label);
  if (d == -3 || d == -4) throw Error(ErrorKind::Unsupported, "fields with units other than +-1 are not supported");
  return make_field(d);
}

// int, or (x, y) for x + y*omega
QuadElem to_elem(long d, const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return QuadElem(d, h.cast<long>(), 0);
  auto t = h.cast<std::pair<long, long>>();
  return QuadElem(d, t.first, t.second);
}

// Python number, or a pair of decimal strings (re, im)
Complex to_complex(const py::handle& h) {
  if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
    auto t = h.cast<std::pair<std::string, std::string>>();
    return Complex(Real(t.first), Real(t.second));
  }
  if (py::isinstance<py::str>(h)) return Complex(Real(h.cast<std::string>()));
  std::complex<double> c = h.cast<std::complex<double>>();
  return Complex(c.real(), c.imag());
}

Value g2(long label, int bits) {
  PrecisionContext ctx = context(bits);
  Field F = field_for(label);
  const long d = F->d();
  PrecGuard pg(bits);
  auto at = [d](const PrecisionContext& c) { return G2_canonical(period_for(d, c), c); };
  Complex v = at(ctx);
  RecognitionResult r = recognize_rational_stable(at, kHeight, ctx);
  return make_value(v, bits, &r);
}

Value cocycle(long label, const std::vector<py::object>& entries, int bits) {
  PrecisionContext ctx = context(bits);
  Field F = field_for(label);
  const long d = F->d();
  if (entries.size() != 4) throw Error(ErrorKind::Usage, "gamma needs four entries");
  GammaMatrix g{to_elem(d, entries[0]), to_elem(d, entries[1]), to_elem(d, entries[2]), to_elem(d, entries[3])};
  if (!g.is_valid()) throw Error(ErrorKind::Usage, "gamma must have entries in O and determinant 1");
  PrecGuard pg(bits);
  Complex v = sczech_phi(g, FracIdeal(d), ctx).value;
  if (F->h() != 1) return make_value(v, bits);
  auto scaled = [&](const PrecisionContext& c) {
    Complex om = period_for(d, c).Omega;
    return sczech_phi(g, FracIdeal(d), c).value * Real(2) / (om * om);
  };
  RecognitionResult r = recognize_in_O_stable(scaled, d, kHeight, ctx);
  return make_value(v, bits, &r);
}

Value dedekind(long label, const py::object& a, const py::object& c, int bits) {
  PrecisionContext ctx = context(bits);
  Field F = field_for(label);
  PrecGuard pg(bits);
  return make_value(dedekind_sum(to_elem(F->d(), a), to_elem(F->d(), c), FracIdeal(F->d()), ctx), bits);
}

py::dict lvalue(long label, std::optional<std::vector<long>> roots, int bits) {
  PrecisionContext ctx = context(bits);
  Field F = field_for(label);
  const long d = F->d();
  std::vector<long> rc = roots ? *roots : std::vector<long>(F->orders().size(), 0);
  PrecGuard pg(bits);
  HeckeCharacter chi = build_character(F, rc, ctx);
  py::dict out;
  out["L"] = make_value(L_value_at_0(chi, ctx), bits);
  out["L_alg"] = py::none();
  out["L_int"] = py::none();
  PeriodData pd;
  try {
    pd = period_for(d, ctx);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Unsupported) throw;
    return out;
  }
  auto [alg, in] = L_alg_int(chi, pd, ctx);
  if (F->h() == 1) {
    auto at = [&](const PrecisionContext& c) { return L_alg_int(build_character(F, rc, c), period_for(d, c), c).first; };
    RecognitionResult r = recognize_rational_stable(at, kHeight, ctx);
    out["L_alg"] = make_value(alg, bits, &r);
  } else {
    out["L_alg"] = make_value(alg, bits);
  }
  out["L_int"] = make_value(in, bits);
  return out;
}

Value kronecker(const py::object& s, int k, const py::object& p, const py::object& q, const py::object& w1,
                const py::object& w2, int bits) {
  PrecisionContext ctx = context(bits);
  PrecGuard pg(bits);
  Lattice L(to_complex(w1), to_complex(w2));
  return make_value(kronecker_G({to_complex(s), k, to_complex(p), to_complex(q), L}, ctx), bits);
}

py::list table(const std::string& name, int bits) {
  if (name != "table1" && name != "table2") throw Error(ErrorKind::Usage, "table must be table1 or table2");
  PrecisionContext ctx = context(bits);
  PrecGuard pg(bits);
  py::list rows;
  for (long d : table_discriminants()) {
    py::dict row;
    row["d"] = d;
    if (name == "table1") {
      auto at = [d](const PrecisionContext& c) { return G2_canonical(period_from_table(d, c), c); };
      RecognitionResult r = recognize_rational_stable(at, kHeight, ctx);
      row["G2"] = make_value(at(ctx), bits, &r);
      row["tabulated"] = table1_value(d);
    } else {
      PeriodData pd = period_from_table(d, ctx);
      auto [a, b] = g2_g3(embed(FracIdeal(d), ctx).scaled(pd.Omega), ctx);
      RecognitionResult ra = recognize_rational(a, Int(1), ctx), rb = recognize_rational(b, Int(1), ctx);
      row["a"] = make_value(a, bits, &ra);
      row["b"] = make_value(b, bits, &rb);
      row["tabulated"] = py::make_tuple(pd.exact->first.get_str(), pd.exact->second.get_str());
    }
    rows.append(row);
  }
  return rows;
}

py::list verify(std::optional<std::vector<int>> criteria, int bits, std::uint64_t seed) {
  context(bits);
  AcceptanceOptions opt;
  opt.bits = bits;
  opt.seed = seed;
  if (criteria) opt.only = *criteria;
  std::vector<CriterionResult> res;
  {
    py::gil_scoped_release release;
    res = run_acceptance(opt);
  }
  py::list out;
  for (const auto& r : res) {
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eisenstein series, Sczech cocycles and Hecke L-values over imaginary quadratic fields";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<Error> usage(m, "UsageError", base.ptr());
  static py::exception<Error> unsupported(m, "UnsupportedError", base.ptr());
  static py::exception<Error> underflow(m, "UnderflowError", base.ptr());
  static py::exception<Error> domain(m, "DomainError", base.ptr());
  static py::exception<Error> pole(m, "PoleError", base.ptr());
  static py::exception<Error> recognition(m, "RecognitionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Usage: py::set_error(usage, e.what()); break;
        case ErrorKind::Unsupported: py::set_error(unsupported, e.what()); break;
        case ErrorKind::Underflow: py::set_error(underflow, e.what()); break;
        case ErrorKind::Domain: py::set_error(domain, e.what()); break;
        case ErrorKind::Pole: py::set_error(pole, e.what()); break;
        case ErrorKind::Recognition: py::set_error(recognition, e.what()); break;
        default: py::set_error(base, e.what()); break;
      }
    }
  });

  py::class_<Value>(m, "Value")
      .def_readonly("value_re", &Value::re)
      .def_readonly("value_im", &Value::im)
      .def_readonly("recognized", &Value::recognized)
      .def_readonly("residual", &Value::residual)
      .def("__complex__", [](const Value& v) { return std::complex<double>(std::stod(v.re), std::stod(v.im)); })
      .def("to_dict",
           [](const Value& v) {
             py::dict d;
             d["value_re"] = v.re;
             d["value_im"] = v.im;
             d["recognized"] = v.recognized;
             d["residual"] = v.residual;
             return d;
           })
      .def("__repr__", [](const Value& v) {
        std::ostringstream os;
        os << std::setprecision(17) << "Value(" << std::stod(v.re) << ", " << std::stod(v.im)
           << ", recognized=" << (v.recognized ? *v.recognized : "None") << ")";
        return os.str();
      });

  m.def("normalize_discriminant", &normalize_discriminant, py::arg("label"));
  m.def("class_number", [](long label) { return field_for(label)->h(); }, py::arg("d"));
  m.def("g2", &g2, py::arg("d"), py::arg("bits") = 384, "G2(L_O) on the canonical lattice, with rational recognition");
  m.def("cocycle", &cocycle, py::arg("d"), py::arg("gamma"), py::arg("bits") = 384,
        "Sczech cocycle Phi_O(gamma); entries are ints or (x, y) for x + y*omega");
  m.def("dedekind_sum", &dedekind, py::arg("d"), py::arg("a"), py::arg("c"), py::arg("bits") = 384);
  m.def("lvalue", &lvalue, py::arg("d"), py::arg("roots") = py::none(), py::arg("bits") = 384);
  m.def("kronecker", &kronecker, py::arg("s"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("w1"),
        py::arg("w2"), py::arg("bits") = 384, "Kronecker-Eisenstein series G(s, k, p, q; Z w1 + Z w2)");
  m.def("table", &table, py::arg("name"), py::arg("bits") = 384);
  m.def("verify", &verify, py::arg("criteria") = py::none(), py::arg("bits") = 384, py::arg("seed") = 0);
}
