#include "g2calc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

void check_same_vars(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) {
    throw DimensionError("polynomials in " + std::to_string(p.nvars()) + " and " +
                         std::to_string(q.nvars()) + " variables");
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  // U+2212 MINUS SIGN is accepted alongside '-'.
  for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;) {
    s.replace(pos, 3, "-");
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  bool negative = false;
  std::string_view body(s);
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  // Within a degree the monomial with the larger power of the earliest variable comes first.
  return a > b;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxDim) {
    throw DimensionError("variable count " + std::to_string(nvars) + " outside 0.." + std::to_string(kMaxDim));
  }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int axis) {
  if (axis < 1 || axis > nvars) {
    throw GradeError("variable x" + std::to_string(axis) + " outside 1.." + std::to_string(nvars));
  }
  Exponent e{};
  e[axis - 1] = 1;
  return monomial(nvars, e, Rational(1));
}

Polynomial Polynomial::monomial(int nvars, const Exponent& e, const Rational& c) {
  for (int i = nvars; i < kMaxDim; ++i) {
    if (e[i] != 0) throw DimensionError("exponent refers to a variable beyond x" + std::to_string(nvars));
  }
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  // GradedLex puts the highest degree last.
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_vars(a, b);
  Polynomial out(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kMaxDim; ++i) {
        unsigned sum = unsigned(ea[i]) + unsigned(eb[i]);
        if (sum > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
        e[i] = static_cast<std::uint16_t>(sum);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, int axis) {
  if (axis < 1 || axis > p.nvars()) {
    throw GradeError("partial derivative axis " + std::to_string(axis) + " outside 1.." + std::to_string(p.nvars()));
  }
  Polynomial out(p.nvars());
  const int i = axis - 1;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent lowered = e;
    --lowered[i];
    out.add_term(lowered, c * e[i]);
  }
  return out;
}

Rational eval(const Polynomial& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(p.nvars()));
  }
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < p.nvars(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

namespace {

std::string monomial_text(const Exponent& e, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational magnitude = abs(c);
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_text(e, p.nvars());
    if (mono.empty()) {
      os << magnitude.get_str();
    } else if (is_one(magnitude)) {
      os << mono;
    } else {
      os << magnitude.get_str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace g2calc
