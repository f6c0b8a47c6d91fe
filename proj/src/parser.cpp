#include "g2calc/parser.hpp"

#include <cctype>

#include "g2calc/errors.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/hodge.hpp"
#include "g2calc/schouten.hpp"

namespace g2calc {

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    // U+2212 minus sign and U+2227 logical and (wedge) in UTF-8.
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::minus, "-", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\xA7") {
      out.push_back({Tok::caret, "^", start});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) {
      const Token& t = peek();
      throw ParseError(std::string("expected ") + what + (t.kind == Tok::end ? " at end of input" : ""), t.position);
    }
  }

  static Expr binary(Expr::Op op, Expr lhs, Expr rhs, std::size_t position) {
    Expr e;
    e.op = op;
    e.position = position;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      lhs = binary(op.kind == Tok::plus ? Expr::Op::add : Expr::Op::sub, std::move(lhs), term(), op.position);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      lhs = binary(op.kind == Tok::star ? Expr::Op::mul : Expr::Op::div, std::move(lhs), unary(), op.position);
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::minus) {
      Expr e;
      e.op = Expr::Op::neg;
      e.position = next().position;
      e.args.push_back(unary());
      return e;
    }
    if (accept(Tok::plus)) return unary();
    return power();
  }

  Expr power() {
    Expr lhs = primary();
    while (peek().kind == Tok::caret) {
      const Token& op = next();
      const bool integer_exponent =
          peek().kind == Tok::number && peek().text.find('.') == std::string::npos;
      lhs = binary(integer_exponent ? Expr::Op::power : Expr::Op::wedge, std::move(lhs), primary(), op.position);
    }
    return lhs;
  }

  Expr primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number: {
        Expr e;
        e.op = Expr::Op::number;
        e.text = t.text;
        e.position = t.position;
        e.number = parse_rational(t.text);
        return e;
      }
      case Tok::name: {
        Expr e;
        e.text = t.text;
        e.position = t.position;
        if (!accept(Tok::lparen)) {
          e.op = Expr::Op::name;
          return e;
        }
        e.op = Expr::Op::call;
        e.args.push_back(expr());
        while (accept(Tok::comma)) e.args.push_back(expr());
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::lparen: {
        Expr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.position);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- evaluation ----

std::string at(std::size_t position) { return " (at offset " + std::to_string(position) + ")"; }

const char* kind_name(const Value& v) {
  if (std::holds_alternative<Polynomial>(v)) return "function";
  if (std::holds_alternative<Form>(v)) return "form";
  return "multivector";
}

bool is_scalar(const Value& v) { return std::holds_alternative<Polynomial>(v); }

/// Optional digits after a prefix such as "dx" or "e"; the axes they name.
std::optional<std::vector<int>> axes_after(const std::string& name, std::string_view prefix, int dim,
                                           std::size_t position) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  }
  std::vector<int> axes;
  if (dim <= 9) {
    for (char ch : digits) axes.push_back(ch - '0');
  } else {
    axes.push_back(std::stoi(digits));
  }
  for (int a : axes) {
    if (a < 1 || a > dim) throw GradeError("'" + name + "' names an axis outside 1.." + std::to_string(dim) + at(position));
  }
  return axes;
}

template <class Kind>
Graded<Kind> ordered_wedge(int dim, const std::vector<int>& axes) {
  Graded<Kind> out = Graded<Kind>::scalar(Polynomial::constant(dim, Rational(1)));
  for (int a : axes) out = wedge(out, Graded<Kind>::basis(dim, MultiIndex{a}));
  return out;
}

Value lookup(const Expr& e, const Environment& env) {
  const int n = env.dim;
  if (auto it = env.names.find(e.text); it != env.names.end()) return it->second;
  if (e.text.size() > 1 && e.text[0] == 'x') {
    const std::string digits = e.text.substr(1);
    bool numeric = true;
    for (char ch : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(ch));
    if (numeric) {
      const int axis = std::stoi(digits);
      if (axis < 1 || axis > n) throw GradeError("variable " + e.text + " outside x1..x" + std::to_string(n) + at(e.position));
      return Polynomial::variable(n, axis);
    }
  }
  if (auto axes = axes_after(e.text, "dx", n, e.position)) return ordered_wedge<FormKind>(n, *axes);
  if (auto axes = axes_after(e.text, "e", n, e.position)) return ordered_wedge<VectorKind>(n, *axes);
  throw ParseError("unknown identifier '" + e.text + "'", e.position);
}

Value negate(Value v) {
  std::visit([](auto& x) { x *= Rational(-1); }, v);
  return v;
}

Value add(const Value& a, const Value& b, std::size_t position) {
  if (is_scalar(a) && is_scalar(b)) return std::get<Polynomial>(a) + std::get<Polynomial>(b);
  if (is_scalar(a) && std::get<Polynomial>(a).is_zero()) return b;
  if (is_scalar(b) && std::get<Polynomial>(b).is_zero()) return a;
  auto combine = [&](auto x, const auto& y) -> Value {
    if (x.grade() != y.grade() && !x.is_zero() && !y.is_zero()) {
      throw GradeError("cannot add grades " + std::to_string(x.grade()) + " and " + std::to_string(y.grade()) +
                       at(position));
    }
    if (x.is_zero()) return y;
    x += y;
    return x;
  };
  if (is_scalar(a) || is_scalar(b)) {
    const Polynomial& f = is_scalar(a) ? std::get<Polynomial>(a) : std::get<Polynomial>(b);
    const Value& other = is_scalar(a) ? b : a;
    if (const auto* form = std::get_if<Form>(&other)) return combine(*form, Form::scalar(f));
    return combine(std::get<MultiVector>(other), MultiVector::scalar(f));
  }
  if (std::holds_alternative<Form>(a) && std::holds_alternative<Form>(b)) {
    return combine(std::get<Form>(a), std::get<Form>(b));
  }
  if (std::holds_alternative<MultiVector>(a) && std::holds_alternative<MultiVector>(b)) {
    return combine(std::get<MultiVector>(a), std::get<MultiVector>(b));
  }
  throw KindError(std::string("cannot add a ") + kind_name(a) + " and a " + kind_name(b) + at(position));
}

Value scale(const Polynomial& f, Value v) {
  std::visit(
      [&](auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Polynomial>) {
          x = x * f;
        } else {
          x *= f;
        }
      },
      v);
  return v;
}

Value product(const Value& a, const Value& b, bool wedge_op, std::size_t position) {
  if (is_scalar(a)) return scale(std::get<Polynomial>(a), b);
  if (is_scalar(b)) return scale(std::get<Polynomial>(b), a);
  if (!wedge_op) {
    throw KindError(std::string("'*' needs a function operand; use '^' for the wedge of a ") + kind_name(a) +
                    " and a " + kind_name(b) + at(position));
  }
  if (std::holds_alternative<Form>(a) && std::holds_alternative<Form>(b)) {
    return wedge(std::get<Form>(a), std::get<Form>(b));
  }
  if (std::holds_alternative<MultiVector>(a) && std::holds_alternative<MultiVector>(b)) {
    return wedge(std::get<MultiVector>(a), std::get<MultiVector>(b));
  }
  throw KindError(std::string("cannot wedge a ") + kind_name(a) + " with a " + kind_name(b) + at(position));
}

void require_args(const Expr& e, std::size_t count) {
  if (e.args.size() != count) {
    throw ParseError(e.text + "() takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"), e.position);
  }
}

Form form_arg(const Value& v, const Expr& e) {
  if (std::holds_alternative<MultiVector>(v)) throw KindError(e.text + "() expects a form" + at(e.position));
  return as_form(v);
}

MultiVector vector_arg(const Value& v, const Expr& e) {
  if (std::holds_alternative<Form>(v)) throw KindError(e.text + "() expects a multivector" + at(e.position));
  return as_multivector(v);
}

void require_g2(const Environment& env, const Expr& e) {
  if (env.dim != 7) throw DimensionError(e.text + "() is defined on R^7 only" + at(e.position));
}

Value call(const Expr& e, const std::vector<Value>& args, const Environment& env) {
  const int n = env.dim;
  const std::string& f = e.text;
  if (f == "d") {
    require_args(e, 1);
    return d(form_arg(args[0], e));
  }
  if (f == "star") {
    require_args(e, 1);
    return star(Metric::euclidean(n), form_arg(args[0], e));
  }
  if (f == "flat") {
    require_args(e, 1);
    return flat(Metric::euclidean(n), vector_arg(args[0], e));
  }
  if (f == "sharp") {
    require_args(e, 1);
    return sharp(Metric::euclidean(n), form_arg(args[0], e));
  }
  if (f == "contract") {
    require_args(e, 2);
    return contract(vector_arg(args[0], e), form_arg(args[1], e));
  }
  if (f == "sn") {
    require_args(e, 2);
    return schouten(vector_arg(args[0], e), vector_arg(args[1], e));
  }
  if (f == "lie") {
    require_args(e, 2);
    MultiVector q = vector_arg(args[0], e);
    if (std::holds_alternative<MultiVector>(args[1])) {
      if (q.grade() != 1) throw GradeError("lie(X, Q) on multivectors needs a vector field X" + at(e.position));
      return lie_derivative(q, std::get<MultiVector>(args[1]));
    }
    return lie_derivative(q, form_arg(args[1], e));
  }
  if (f == "pi7" || f == "pi14") {
    require_args(e, 1);
    require_g2(env, e);
    Form beta = form_arg(args[0], e);
    if (beta.grade() != 2) throw GradeError(f + "() needs a 2-form" + at(e.position));
    return f == "pi7" ? pi7(shared_context(), beta) : pi14(shared_context(), beta);
  }
  if (f == "cross") {
    require_args(e, 2);
    require_g2(env, e);
    MultiVector x = vector_arg(args[0], e);
    MultiVector y = vector_arg(args[1], e);
    if (x.grade() != 1 || y.grade() != 1) throw GradeError("cross() needs two vector fields" + at(e.position));
    return cross(shared_context(), x, y);
  }
  throw ParseError("unknown function '" + f + "'", e.position);
}

template <class Error>
[[noreturn]] void rethrow_with_position(const Error& err, std::size_t position) {
  std::string message = err.what();
  if (message.find("(at offset") != std::string::npos) throw err;
  throw Error(message + at(position));
}

Value eval_node(const Expr& e, const Environment& env) {
  const int n = env.dim;
  switch (e.op) {
    case Expr::Op::number:
      return Polynomial::constant(n, e.number);
    case Expr::Op::name:
      return lookup(e, env);
    case Expr::Op::neg:
      return negate(eval_node(e.args[0], env));
    case Expr::Op::add:
      return add(eval_node(e.args[0], env), eval_node(e.args[1], env), e.position);
    case Expr::Op::sub:
      return add(eval_node(e.args[0], env), negate(eval_node(e.args[1], env)), e.position);
    case Expr::Op::mul:
      return product(eval_node(e.args[0], env), eval_node(e.args[1], env), false, e.position);
    case Expr::Op::wedge:
      return product(eval_node(e.args[0], env), eval_node(e.args[1], env), true, e.position);
    case Expr::Op::div: {
      Value lhs = eval_node(e.args[0], env);
      Value rhs = eval_node(e.args[1], env);
      if (!is_scalar(rhs) || !std::get<Polynomial>(rhs).is_constant()) {
        throw KindError("division only by a constant" + at(e.position));
      }
      const Rational c = std::get<Polynomial>(rhs).constant_term();
      if (sgn(c) == 0) throw GradeError("division by zero" + at(e.position));
      return scale(Polynomial::constant(n, 1 / c), std::move(lhs));
    }
    case Expr::Op::power: {
      Value base = eval_node(e.args[0], env);
      if (!is_scalar(base)) throw KindError(std::string("cannot raise a ") + kind_name(base) + " to a power" + at(e.position));
      const Rational exponent = e.args[1].number;
      if (exponent > 64) throw GradeError("exponent too large" + at(e.position));
      return std::get<Polynomial>(base).pow(static_cast<unsigned>(exponent.get_num().get_ui()));
    }
    case Expr::Op::call: {
      std::vector<Value> args;
      for (const auto& a : e.args) args.push_back(eval_node(a, env));
      try {
        return call(e, args, env);
      } catch (const KindError& err) {
        rethrow_with_position(err, e.position);
      } catch (const GradeError& err) {
        rethrow_with_position(err, e.position);
      } catch (const DimensionError& err) {
        rethrow_with_position(err, e.position);
      } catch (const UnsupportedError& err) {
        rethrow_with_position(err, e.position);
      }
    }
  }
  throw ParseError("malformed expression", e.position);
}

}  // namespace

Expr parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

Environment Environment::standard(int dim) {
  if (dim < 1 || dim > kMaxDim) throw DimensionError("dimension must be between 1 and " + std::to_string(kMaxDim));
  Environment env;
  env.dim = dim;
  if (dim == 7) {
    const G2Context& ctx = shared_context();
    env.names.emplace("phi0", ctx.phi());
    env.names.emplace("starphi0", ctx.star_phi());
    env.names.emplace("vol7", ctx.vol());
  }
  return env;
}

Value evaluate(const Expr& expr, const Environment& env) { return eval_node(expr, env); }

Value evaluate(std::string_view text, const Environment& env) { return eval_node(parse(text), env); }

std::string render(const Value& value) {
  return std::visit([](const auto& x) { return to_string(x); }, value);
}

Form as_form(const Value& value) {
  if (const auto* f = std::get_if<Polynomial>(&value)) return Form::scalar(*f);
  if (const auto* form = std::get_if<Form>(&value)) return *form;
  throw KindError("expected a form, got a multivector");
}

MultiVector as_multivector(const Value& value) {
  if (const auto* f = std::get_if<Polynomial>(&value)) return MultiVector::scalar(*f);
  if (const auto* q = std::get_if<MultiVector>(&value)) return *q;
  throw KindError("expected a multivector, got a form");
}

}  // namespace g2calc
