#include "apolar/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

// A term before the ambient dimension is known: variable index -> exponent.
struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, int>> powers;
  std::size_t offset;
};

using RawPoly = std::vector<RawTerm>;

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // '-' or the UTF-8 minus sign U+2212.
  bool accept_minus() {
    skip_ws();
    if (accept('-')) return true;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::optional<std::string> digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    auto d = digits();
    if (!d) fail("expected an integer");
    if (d->size() > 6) fail("exponent too large");
    return std::stoi(*d);
  }

  bool at_letter() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::size_t variable() {
    skip_ws();
    const std::size_t start = pos_;
    const char letter = text_[pos_++];
    std::size_t digit_end = pos_;
    while (digit_end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digit_end])))
      ++digit_end;
    if (digit_end > pos_) {
      if (letter != 'x' && letter != 't') {
        pos_ = start;
        fail(std::string("unknown variable '") + letter + "'");
      }
      const auto index = std::stoul(std::string(text_.substr(pos_, digit_end - pos_)));
      pos_ = digit_end;
      if (index == 0) {
        pos_ = start;
        fail("variable indices start at 1");
      }
      return check_index(index - 1, start);
    }
    const std::string name(1, letter);
    auto it = std::find(names_.letters.begin(), names_.letters.end(), name);
    if (it == names_.letters.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return check_index(static_cast<std::size_t>(it - names_.letters.begin()), start);
  }

  std::size_t check_index(std::size_t index, std::size_t start) {
    if (names_.dim != 0 && index >= names_.dim) {
      pos_ = start;
      fail("unknown variable: index " + std::to_string(index + 1) + " exceeds " +
           std::to_string(names_.dim) + " variables");
    }
    max_index_ = std::max(max_index_, index);
    return index;
  }

  void factors(RawTerm& t) {
    do {
      if (!at_letter()) fail("expected a variable");
      const std::size_t var = variable();
      int e = 1;
      if (accept('^')) e = small_int();
      t.powers.emplace_back(var, e);
    } while (accept('*'));
  }

  RawTerm term(bool negative) {
    skip_ws();
    RawTerm t{negative ? Rational(-1) : Rational(1), {}, pos_};
    if (auto num = digits()) {
      Rational c{Integer(*num)};
      if (accept('/')) {
        auto den = digits();
        if (!den) fail("expected a denominator");
        Integer dz(*den);
        if (dz == 0) fail("zero denominator");
        c /= Rational(dz);
      }
      c.canonicalize();
      t.coeff *= c;
      if (accept('*') || at_letter()) factors(t);
      return t;
    }
    if (!at_letter()) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("expected a term");
    }
    factors(t);
    return t;
  }

  RawPoly poly() {
    RawPoly out;
    bool negative = accept_minus();
    if (!negative) accept('+');
    out.push_back(term(negative));
    while (true) {
      if (accept('+')) {
        out.push_back(term(false));
      } else if (accept_minus()) {
        out.push_back(term(true));
      } else {
        break;
      }
    }
    return out;
  }

  std::size_t dim() const {
    return names_.dim != 0 ? names_.dim : std::max<std::size_t>(max_index_ + 1, 1);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

Polynomial build(const RawPoly& raw, std::size_t d) {
  Polynomial p(d);
  for (const auto& t : raw) {
    std::vector<int> e(d, 0);
    for (auto [var, power] : t.powers) e[var] += power;
    p.add_term(ExponentVector(std::move(e)), t.coeff);
  }
  return p;
}

void expect_end(Parser& parser) {
  if (!parser.at_end()) parser.fail("unexpected trailing input");
}

bool looks_like_json(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') return false;
  auto second = text.find_first_not_of(" \t\r\n", first + 1);
  return second != std::string_view::npos && text[second] == '"';
}

ParsedIdeal parse_ideal_json(std::string_view text, const VariableNames& names) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.contains("gens") || !j["gens"].is_array()) throw ParseError("missing \"gens\" array", 0);
  std::vector<ExponentVector> rows;
  std::size_t d = names.dim;
  for (const auto& row : j["gens"]) {
    auto coords = row.get<std::vector<int>>();
    if (d == 0) d = coords.size();
    if (coords.size() != d) throw ParseError("mixed ambient dimension in \"gens\"", 0);
    try {
      rows.emplace_back(std::move(coords));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (d == 0) throw ParseError("cannot infer the number of variables", 0);
  ParsedIdeal out{d, {}, true};
  for (const auto& r : rows) out.generators.push_back(Polynomial::monomial(r));
  return out;
}

}  // namespace

MonomialIdeal ParsedIdeal::as_monomial() const {
  if (!monomial) throw DomainError("ideal is not generated by monomials");
  std::vector<ExponentVector> gens;
  for (const auto& g : generators) gens.push_back(g.lex_leading());
  return MonomialIdeal::from_generators(dim, std::move(gens));
}

HomogeneousIdeal ParsedIdeal::as_homogeneous() const {
  return HomogeneousIdeal(dim, generators);
}

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  Parser parser(text, names);
  RawPoly raw = parser.poly();
  expect_end(parser);
  return build(raw, parser.dim());
}

ParsedIdeal parse_ideal(std::string_view text, const VariableNames& names) {
  if (looks_like_json(text)) return parse_ideal_json(text, names);
  Parser parser(text, names);
  parser.expect('(');
  std::vector<RawPoly> raws;
  if (!parser.accept(')')) {
    raws.push_back(parser.poly());
    while (parser.accept(',')) raws.push_back(parser.poly());
    parser.expect(')');
  }
  expect_end(parser);
  ParsedIdeal out{parser.dim(), {}, true};
  for (const auto& raw : raws) {
    Polynomial g = build(raw, out.dim);
    if (g.is_zero()) continue;
    out.monomial = out.monomial && g.is_monomial();
    out.generators.push_back(std::move(g));
  }
  return out;
}

Antichain parse_antichain(std::string_view text, const VariableNames& names) {
  Parser parser(text, names);
  parser.expect('{');
  std::vector<RawPoly> raws;
  if (!parser.accept('}')) {
    raws.push_back(parser.poly());
    while (parser.accept(',')) raws.push_back(parser.poly());
    parser.expect('}');
  }
  expect_end(parser);
  const std::size_t d = parser.dim();
  std::vector<ExponentVector> elems;
  for (const auto& raw : raws) {
    Polynomial m = build(raw, d);
    if (!m.is_monomial()) throw ParseError("antichain entries must be monomials", raw.front().offset);
    elems.push_back(m.lex_leading());
  }
  return Antichain(d, std::move(elems));
}

ExponentVector parse_exponent_list(std::string_view text) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(std::string(piece), &used));
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated list of integers", pos);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return ExponentVector(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_ideal(const MonomialIdeal& I, std::string_view prefix) {
  std::string out = "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(I.generators()[i], prefix);
  }
  return out + ")";
}

std::string format_ideal(const HomogeneousIdeal& I, std::string_view prefix) {
  std::string out = "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_polynomial(I.generators()[i], prefix);
  }
  return out + ")";
}

std::string format_antichain(const Antichain& A, std::string_view prefix) {
  std::string out = "{";
  for (std::size_t i = 0; i < A.elements().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(A.elements()[i], prefix);
  }
  return out + "}";
}

}  // namespace apolar
