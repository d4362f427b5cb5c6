#include "apolar/polynomial.hpp"

#include <stdexcept>

#include "apolar/errors.hpp"

namespace apolar {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer multinomial(int n, std::span<const int> parts) {
  int sum = 0;
  for (int k : parts) {
    if (k < 0) return 0;
    sum += k;
  }
  if (sum != n) return 0;
  Integer out = factorial(n);
  for (int k : parts) out /= factorial(k);
  return out;
}

Polynomial::Polynomial(std::size_t d) : dim_(d) {
  if (d == 0) throw std::invalid_argument("polynomial ring needs d >= 1");
}

Polynomial Polynomial::monomial(const ExponentVector& e, Rational c) {
  Polynomial p(e.dim());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::constant(std::size_t d, Rational c) {
  return monomial(ExponentVector(d), std::move(c));
}

Polynomial Polynomial::variable(std::size_t d, std::size_t i) {
  return monomial(ExponentVector::unit(d, i));
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  check_same_ambient(dim_, e.dim());
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  check_same_ambient(dim_, e.dim());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::degree() const {
  std::optional<int> out;
  for (const auto& [e, c] : terms_)
    if (!out || e.degree() > *out) out = e.degree();
  return out;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int deg = terms_.begin()->first.degree();
  for (const auto& [e, c] : terms_)
    if (e.degree() != deg) return std::nullopt;
  return deg;
}

const ExponentVector& Polynomial::lex_leading() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ambient(dim_, o.dim_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ambient(dim_, o.dim_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ambient(a.dim_, b.dim_);
  Polynomial out(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  return out;
}

Polynomial pow(const Polynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial out = Polynomial::constant(p.dim(), 1);
  for (int i = 0; i < n; ++i) out = out * p;
  return out;
}

namespace {

template <bool Weighted>
Polynomial act(const Polynomial& f, const Polynomial& g) {
  check_same_ambient(f.dim(), g.dim());
  Polynomial out(f.dim());
  for (const auto& [p, cf] : f.terms()) {
    for (const auto& [q, cg] : g.terms()) {
      auto diff = sub_checked(q, p);
      if (!diff) continue;
      Rational c = cf * cg;
      if constexpr (Weighted) {
        for (std::size_t i = 0; i < q.dim(); ++i)
          c *= Rational(factorial(q[i]) / factorial((*diff)[i]));
      }
      out.add_term(*diff, c);
    }
  }
  return out;
}

}  // namespace

Polynomial diff_action(const Polynomial& f, const Polynomial& g) {
  return act<true>(f, g);
}

Polynomial contraction_action(const Polynomial& f, const Polynomial& g) {
  return act<false>(f, g);
}

bool annihilates(const Polynomial& f, const Polynomial& Q) {
  return diff_action(f, Q).is_zero();
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

std::string format_polynomial(const Polynomial& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool is_one = e.degree() == 0;
    if (mag != 1 || is_one) {
      out += format_rational(mag);
      if (!is_one) out += '*';
    }
    if (!is_one) out += format_monomial(e, prefix);
  }
  return out;
}

}  // namespace apolar
