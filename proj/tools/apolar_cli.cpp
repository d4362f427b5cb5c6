// apolar: command line front end for the monomial ideal and graded engine
// operations. Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/gorenstein.hpp"
#include "apolar/graded_engine.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/oracle.hpp"
#include "apolar/text.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace apolar;

struct Globals {
  std::size_t vars = 0;
  std::string var_names;
  std::string format = "text";
  std::optional<int> max_degree;
  std::string out;
};

struct Result {
  json data = json::object();
  std::string text;
};

VariableNames names(const Globals& g) {
  VariableNames v;
  v.dim = g.vars;
  if (!g.var_names.empty()) {
    v.letters.clear();
    std::stringstream ss(g.var_names);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw ParseError("empty variable name", 0);
      v.letters.push_back(item);
    }
    if (v.dim == 0) v.dim = v.letters.size();
  }
  return v;
}

json exponents(const ExponentVector& e) { return json(std::vector<int>(e.begin(), e.end())); }

json exponent_list(const std::vector<ExponentVector>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(exponents(e));
  return a;
}

json monomial_json(const MonomialIdeal& I) {
  return {{"text", format_ideal(I)}, {"gens", exponent_list(I.generators())}};
}

json antichain_json(const Antichain& A) {
  return {{"text", format_antichain(A)}, {"elements", exponent_list(A.elements())}};
}

json ideal_json(const HomogeneousIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(format_polynomial(g));
  return {{"text", format_ideal(I)}, {"gens", gens}};
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

MonomialIdeal monomial_arg(const std::string& text, const Globals& g) {
  auto parsed = parse_ideal(text, names(g));
  if (!parsed.monomial) throw DomainError("this operation needs a monomial ideal");
  return parsed.as_monomial();
}

HomogeneousIdeal homogeneous_arg(const std::string& text, const Globals& g) {
  return parse_ideal(text, names(g)).as_homogeneous();
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(' ');
    auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty coefficient", offset);
    Rational q;
    if (q.set_str(item.substr(first, last - first + 1), 10) != 0)
      throw ParseError("bad coefficient '" + item + "'", offset + first);
    q.canonicalize();
    out.push_back(q);
    offset += item.size() + 1;
  }
  return out;
}

std::string staircase_ascii(const MonomialIdeal& I, const Antichain& doc, int w, int h) {
  std::string out;
  for (int y = h; y >= 0; --y) {
    out += (y < 10 ? " " : "") + std::to_string(y) + " ";
    for (int x = 0; x <= w; ++x) {
      ExponentVector m{x, y};
      char c = '.';
      if (doc.contains(m)) c = 'o';
      else if (I.contains(m)) c = '#';
      out += c;
    }
    out += '\n';
  }
  return out + "   legend: # in I, o docle, . outside I\n";
}

std::string staircase_svg(const MonomialIdeal& I, const Antichain& doc, int w, int h) {
  const int cell = 24;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (w + 1) * cell
    << "\" height=\"" << (h + 1) * cell << "\">\n";
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x <= w; ++x) {
      ExponentVector m{x, y};
      const char* fill = doc.contains(m) ? "#d62728" : I.contains(m) ? "#9ecae1" : "#ffffff";
      s << "  <rect x=\"" << x * cell << "\" y=\"" << (h - y) * cell << "\" width=\"" << cell
        << "\" height=\"" << cell << "\" fill=\"" << fill << "\" stroke=\"#444\"/>\n";
    }
  s << "</svg>\n";
  return s.str();
}

Result spec_header(const GorensteinSpec& spec) {
  Result r;
  r.data["d"] = spec.d();
  r.data["k"] = spec.k();
  r.data["p"] = format_polynomial(spec.p());
  r.data["M"] = spec.M();
  return r;
}

int emit(const Result& r, const Globals& g, const std::string& command) {
  std::string payload;
  if (g.format == "json") {
    json doc = {{"schema", 1}, {"command", command}};
    for (auto& [k, v] : r.data.items()) doc[k] = v;
    payload = doc.dump(2) + "\n";
  } else {
    payload = r.text;
    if (!payload.empty() && payload.back() != '\n') payload += '\n';
  }
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(g.out);
    if (!f) throw DomainError("cannot open output file " + g.out);
    f << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with monomial and homogeneous artinian ideals"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--vars", g.vars, "Number of variables (inferred when omitted)");
  app.add_option("--vars-names", g.var_names, "Comma separated letters for the variables");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", g.max_degree, "Degree cutoff for graded computations");
  app.add_option("--out", g.out, "Write output to this file");
  app.fallthrough();

  std::string ideal_text, second_text, poly_text, coeff_text, series_name;
  int k = 0;
  bool svg = false, dump_slices = false;
  std::string box_text;
  std::function<Result()> action;
  std::string command;

  auto sub = [&](const std::string& name, const std::string& help, auto&& fn) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&, name, fn] {
      command = name;
      action = fn;
    });
    return s;
  };
  auto with_ideal = [&](CLI::App* s) {
    s->add_option("ideal", ideal_text, "Ideal, e.g. \"(x^3, x*y, y^2)\"")->required();
    return s;
  };
  auto with_kp = [&](CLI::App* s) {
    s->add_option("--k", k, "Exponent of the power ideal")->required();
    s->add_option("--p", poly_text, "Homogeneous polynomial p")->required();
    return s;
  };
  auto spec_of = [&] { return GorensteinSpec(k, parse_polynomial(poly_text, names(g))); };

  with_ideal(sub("docle", "Maximal monomials outside a monomial ideal", [&] {
    auto A = docle(monomial_arg(ideal_text, g));
    return Result{antichain_json(A), format_antichain(A)};
  }));

  with_ideal(sub("closure", "Complement of the downset of the docle", [&] {
    auto c = closure(monomial_arg(ideal_text, g));
    Result r;
    r.data["whole_poset"] = c.whole_poset;
    if (c.whole_poset) {
      r.text = "whole poset";
    } else {
      r.data["ideal"] = monomial_json(c.ideal);
      r.text = format_ideal(c.ideal);
    }
    return r;
  }));

  with_ideal(sub("saturate", "I : m^inf", [&] {
    auto J = saturate(monomial_arg(ideal_text, g));
    return Result{monomial_json(J), format_ideal(J)};
  }));

  with_ideal(sub("decompose", "I = J ∩ H with J saturated and H m-primary", [&] {
    auto dec = decompose(monomial_arg(ideal_text, g));
    Result r;
    r.data["J"] = format_ideal(dec.saturated);
    r.data["H"] = format_ideal(dec.primary);
    r.text = "J = " + format_ideal(dec.saturated) + "\nH = " + format_ideal(dec.primary);
    return r;
  }));

  sub("inverse-ideal", "Zero-dimensional monomial ideal with the given docle", [&] {
       auto I = inverse_ideal(parse_antichain(ideal_text, names(g)));
       return Result{monomial_json(I), format_ideal(I)};
     })
      ->add_option("antichain", ideal_text, "Antichain, e.g. \"{x^2*y, y^3}\"")
      ->required();

  with_ideal(sub("inverse-system", "Dual monomial generators of a zero-dimensional monomial ideal", [&] {
    auto I = monomial_arg(ideal_text, g);
    if (!I.is_zero_dimensional()) throw DomainError("ideal is not zero-dimensional");
    auto A = docle(I);
    Result r;
    r.data["generators"] = exponent_list(A.elements());
    r.data["text"] = format_antichain(A, "t");
    r.text = format_antichain(A, "t");
    return r;
  }));

  auto* inter = sub("intersect", "Intersection of two monomial ideals", [&] {
    auto I = intersect(monomial_arg(ideal_text, g), monomial_arg(second_text, g));
    return Result{monomial_json(I), format_ideal(I)};
  });
  inter->add_option("first", ideal_text)->required();
  inter->add_option("second", second_text)->required();

  with_ideal(sub("hilbert", "Hilbert function of R/I", [&] {
    auto I = homogeneous_arg(ideal_text, g);
    auto h = hilbert_function(I, g.max_degree);
    std::size_t total = 0;
    for (auto v : h) total += v;
    Result r;
    r.data["hilbert"] = h;
    r.data["dimension"] = total;
    r.text = join_sizes(h) + "\ndim = " + std::to_string(total);
    if (dump_slices) {
      json slices = json::array();
      for (int e = 0; e <= static_cast<int>(h.size()); ++e) {
        const auto& s = I.slice(e);
        json rows = json::array();
        for (const auto& row : s.reduced.rows()) rows.push_back(vector_json(row));
        slices.push_back({{"degree", e},
                          {"columns", exponent_list(s.monomial_basis)},
                          {"rows", rows}});
      }
      r.data["slices"] = slices;
    }
    return r;
  }))->add_flag("--dump-slices", dump_slices, "Include reduced Macaulay matrices (json)");

  with_ideal(sub("socle", "Socle of R/I by degree", [&] {
    auto comps = socle(homogeneous_arg(ideal_text, g), g.max_degree);
    Result r;
    json arr = json::array();
    std::size_t dim = 0;
    for (const auto& c : comps) {
      json reps = json::array();
      for (const auto& p : c.representatives) {
        reps.push_back(format_polynomial(p));
        r.text += "degree " + std::to_string(c.degree) + ": " + format_polynomial(p) + "\n";
      }
      dim += c.basis.size();
      arr.push_back({{"degree", c.degree}, {"basis", reps}});
    }
    r.data["socle"] = arr;
    r.data["dimension"] = dim;
    r.text += "dim = " + std::to_string(dim);
    return r;
  }));

  with_ideal(sub("initial-ideal", "LEX initial ideal", [&] {
    auto in = initial_monomials(homogeneous_arg(ideal_text, g), g.max_degree);
    return Result{monomial_json(in), format_ideal(in)};
  }));

  with_kp(sub("colon-power", "(x_1^k, ..., x_d^k) : p", [&] {
    auto I = colon_power_ideal(k, parse_polynomial(poly_text, names(g)));
    return Result{ideal_json(I), format_ideal(I)};
  }));

  sub("ann", "Apolar annihilator of a homogeneous polynomial", [&] {
    auto I = ann_partial(parse_polynomial(poly_text, names(g)));
    return Result{ideal_json(I), format_ideal(I)};
  })->add_option("--q", poly_text, "Polynomial in t1..td")->required();

  with_kp(sub("antipodal", "Antipodal polynomial of p", [&] {
    auto spec = spec_of();
    auto r = spec_header(spec);
    auto a = format_polynomial(antipodal(spec), "t");
    r.data["antipodal"] = a;
    r.text = a;
    return r;
  }));

  with_kp(sub("gorenstein-check", "Compare (x^k) : p with the annihilator of its antipodal", [&] {
    auto spec = spec_of();
    auto r = spec_header(spec);
    bool ok = verify_gorenstein_ann(spec);
    r.data["equal"] = ok;
    r.text = std::string("equal = ") + yes_no(ok);
    return r;
  }));

  with_kp(sub("monomial-iff", "Monomiality of (x^k) : p against its socle monomial", [&] {
    auto spec = spec_of();
    auto res = monomial_iff_test(spec);
    auto r = spec_header(spec);
    r.data["is_monomial_ideal"] = res.is_monomial_ideal;
    r.data["socle_monomial"] = format_monomial(res.socle_monomial);
    r.data["ann_of_socle_equals_ideal"] = res.ann_of_socle_equals_ideal;
    r.text = std::string("is_monomial_ideal = ") + yes_no(res.is_monomial_ideal) +
             "\nsocle_monomial = " + format_monomial(res.socle_monomial) +
             "\nann_of_socle_equals_ideal = " + yes_no(res.ann_of_socle_equals_ideal);
    return r;
  }));

  auto* series = with_kp(sub("series-check", "Annihilator of f(sum t_i x_i) in K[t] ⊗ R/I", [&] {
    auto spec = spec_of();
    SeriesSpec f;
    if (!coeff_text.empty()) f.coeffs = parse_coeffs(coeff_text);
    else if (series_name == "exp") f = SeriesSpec::exponential(spec.M() + 1);
    else if (series_name == "geometric") f = SeriesSpec::geometric(spec.M() + 1);
    else throw DomainError("give --coeffs or --series");
    auto rep = series_annihilator_report(spec, f);
    auto r = spec_header(spec);
    r.data["ok"] = rep.ok();
    r.data["annihilator_dims"] = rep.annihilator_dims;
    r.data["ideal_dims"] = rep.ideal_dims;
    r.data["mismatched_degrees"] = rep.mismatched_degrees;
    r.data["power_nonzero_at_top"] = rep.power_nonzero_at_top;
    r.data["power_zero_above_top"] = rep.power_zero_above_top;
    r.text = std::string("ok = ") + yes_no(rep.ok()) +
             "\nannihilator dims = " + join_sizes(rep.annihilator_dims) +
             "\nideal dims = " + join_sizes(rep.ideal_dims);
    return r;
  }));
  series->add_option("--coeffs", coeff_text, "a_0,a_1,... as rationals");
  series->add_option("--series", series_name, "Named series")
      ->check(CLI::IsMember({"exp", "geometric"}));

  with_ideal(sub("staircase", "Diagram of a monomial ideal in two variables", [&] {
    auto I = monomial_arg(ideal_text, g);
    if (I.dim() != 2) throw DomainError("staircase needs two variables");
    if (I.is_zero()) throw DomainError("staircase of the zero ideal");
    Antichain doc(2);
    if (!I.is_unit()) {
      try {
        doc = docle(I);
      } catch (const DomainError&) {
      }
    }
    auto b = I.generator_bound();
    const int w = b[0] + 1, h = b[1] + 1;
    Result r;
    r.data["ideal"] = monomial_json(I);
    r.data["docle"] = antichain_json(doc);
    r.text = svg ? staircase_svg(I, doc, w, h) : staircase_ascii(I, doc, w, h);
    r.data["diagram"] = r.text;
    return r;
  }))->add_flag("--svg", svg, "Emit SVG instead of ASCII");

  auto* orc = app.add_subcommand("oracle", "Brute-force reference computations");
  orc->group("");
  orc->require_subcommand(1);
  auto oracle_sub = [&](const std::string& name, auto&& fn) {
    auto* s = orc->add_subcommand(name);
    s->callback([&, name, fn] {
      command = "oracle " + name;
      action = fn;
    });
    return s;
  };
  auto* odoc = oracle_sub("docle", [&] {
    auto I = monomial_arg(ideal_text, g);
    auto box = box_text.empty() ? I.generator_bound() : parse_exponent_list(box_text);
    auto A = oracle::brute_docle(I, box);
    return Result{antichain_json(A), format_antichain(A)};
  });
  odoc->add_option("ideal", ideal_text)->required();
  odoc->add_option("--box", box_text, "Scan bound, e.g. 4,4");
  oracle_sub("ann", [&] {
    auto Q = parse_polynomial(poly_text, names(g));
    auto t = oracle::brute_ann(Q, g.max_degree.value_or(Q.degree().value_or(0) + 1));
    Result r;
    r.data["kernel_dims"] = t.kernel_dims;
    r.text = join_sizes(t.kernel_dims);
    return r;
  })->add_option("--q", poly_text)->required();
  oracle_sub("hilbert", [&] {
    auto parsed = parse_ideal(ideal_text, names(g));
    int cutoff = g.max_degree.value_or(parsed.as_homogeneous().default_cutoff());
    auto h = oracle::brute_hilbert(parsed.dim, parsed.generators, cutoff);
    Result r;
    r.data["hilbert"] = h;
    r.text = join_sizes(h);
    return r;
  })->add_option("ideal", ideal_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!action) return 2;
    return emit(action(), g, command);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
