#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/gorenstein.hpp"
#include "apolar/graded_engine.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/text.hpp"

namespace py = pybind11;
using namespace apolar;

namespace {

using Exps = std::vector<std::vector<int>>;

std::size_t dim_of(const Exps& es) {
  if (es.empty()) throw DomainError("need at least one exponent vector to fix the dimension");
  return es.front().size();
}

std::vector<ExponentVector> to_vectors(const Exps& es) {
  const std::size_t d = dim_of(es);
  std::vector<ExponentVector> out;
  for (const auto& e : es) {
    check_same_ambient(d, e.size());
    out.emplace_back(e);
  }
  return out;
}

Exps from_vectors(const std::vector<ExponentVector>& es) {
  Exps out;
  for (const auto& e : es) out.emplace_back(e.begin(), e.end());
  return out;
}

MonomialIdeal to_ideal(const Exps& gens) { return MonomialIdeal::from_generators(dim_of(gens), to_vectors(gens)); }

VariableNames names(std::size_t vars) { return VariableNames{vars}; }

std::vector<std::string> gens_text(const HomogeneousIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(format_polynomial(g));
  return out;
}

GorensteinSpec spec(int k, const std::string& p, std::size_t vars) {
  return GorensteinSpec(k, parse_polynomial(p, names(vars)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monomial ideal calculus and graded Gorenstein computations";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotArtinian>(m, "NotArtinian", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AmbientMismatch>(m, "AmbientMismatch", PyExc_ValueError);

  m.def("docle", [](const Exps& gens) { return from_vectors(docle(to_ideal(gens)).elements()); },
        py::arg("gens"), "Maximal monomials outside the ideal, LEX-ascending.");
  m.def("inverse_ideal",
        [](const Exps& antichain) {
          return from_vectors(inverse_ideal(Antichain(dim_of(antichain), to_vectors(antichain))).generators());
        },
        py::arg("antichain"));
  m.def("closure",
        [](const Exps& gens) -> std::optional<Exps> {
          auto c = closure(to_ideal(gens));
          if (c.whole_poset) return std::nullopt;
          return from_vectors(c.ideal.generators());
        },
        py::arg("gens"), "Closure of the ideal, or None for the whole poset.");
  m.def("saturate", [](const Exps& gens) { return from_vectors(saturate(to_ideal(gens)).generators()); },
        py::arg("gens"));
  m.def("decompose",
        [](const Exps& gens) {
          auto dec = decompose(to_ideal(gens));
          return py::make_tuple(from_vectors(dec.saturated.generators()),
                                from_vectors(dec.primary.generators()));
        },
        py::arg("gens"), "(saturated part, primary part)");
  m.def("intersect",
        [](const Exps& a, const Exps& b) {
          return from_vectors(intersect(to_ideal(a), to_ideal(b)).generators());
        },
        py::arg("a"), py::arg("b"));
  m.def("format_ideal", [](const Exps& gens) { return format_ideal(to_ideal(gens)); }, py::arg("gens"));

  m.def("parse_ideal",
        [](const std::string& text, std::size_t vars) {
          auto parsed = parse_ideal(text, names(vars));
          std::vector<std::string> out;
          for (const auto& g : parsed.generators) out.push_back(format_polynomial(g));
          return out;
        },
        py::arg("text"), py::arg("vars") = 0);
  m.def("hilbert_function",
        [](const std::string& text, std::size_t vars) {
          return hilbert_function(parse_ideal(text, names(vars)).as_homogeneous());
        },
        py::arg("ideal"), py::arg("vars") = 0);
  m.def("socle_dimension",
        [](const std::string& text, std::size_t vars) {
          return socle_dimension(parse_ideal(text, names(vars)).as_homogeneous());
        },
        py::arg("ideal"), py::arg("vars") = 0);
  m.def("initial_ideal",
        [](const std::string& text, std::size_t vars) {
          return from_vectors(initial_monomials(parse_ideal(text, names(vars)).as_homogeneous()).generators());
        },
        py::arg("ideal"), py::arg("vars") = 0);

  m.def("colon_power",
        [](int k, const std::string& p, std::size_t vars) {
          return gens_text(colon_power_ideal(k, parse_polynomial(p, names(vars))));
        },
        py::arg("k"), py::arg("p"), py::arg("vars") = 0);
  m.def("ann",
        [](const std::string& q, std::size_t vars) {
          return gens_text(ann_partial(parse_polynomial(q, names(vars))));
        },
        py::arg("q"), py::arg("vars") = 0);
  m.def("antipodal",
        [](int k, const std::string& p, std::size_t vars) {
          return format_polynomial(antipodal(spec(k, p, vars)), "t");
        },
        py::arg("k"), py::arg("p"), py::arg("vars") = 0);
  m.def("dual_socle_poly",
        [](int k, const std::string& p, std::size_t vars) {
          return format_polynomial(dual_socle_poly(spec(k, p, vars)), "t");
        },
        py::arg("k"), py::arg("p"), py::arg("vars") = 0);
  m.def("verify_gorenstein_ann",
        [](int k, const std::string& p, std::size_t vars) { return verify_gorenstein_ann(spec(k, p, vars)); },
        py::arg("k"), py::arg("p"), py::arg("vars") = 0);
  m.def("monomial_iff",
        [](int k, const std::string& p, std::size_t vars) {
          auto r = monomial_iff_test(spec(k, p, vars));
          return py::make_tuple(r.is_monomial_ideal, r.ann_of_socle_equals_ideal);
        },
        py::arg("k"), py::arg("p"), py::arg("vars") = 0,
        "(ideal is monomial, annihilator of the socle monomial equals the ideal)");
  m.def("series_check",
        [](int k, const std::string& p, const std::vector<std::string>& coeffs, std::size_t vars) {
          SeriesSpec f;
          for (const auto& c : coeffs) {
            Rational q;
            if (q.set_str(c, 10) != 0) throw ParseError("bad coefficient '" + c + "'", 0);
            q.canonicalize();
            f.coeffs.push_back(q);
          }
          return series_annihilator_check(spec(k, p, vars), f);
        },
        py::arg("k"), py::arg("p"), py::arg("coeffs"), py::arg("vars") = 0,
        "Coefficients a_0.. given as rational strings such as \"1/6\".");
}
