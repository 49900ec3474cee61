#pragma once

// Generalized rational expressions over matrix rings.
//
// Grammar (LL(1), no implicit multiplication):
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' '-'? int)?
//   atom   := var | name | int | '(' expr ')'
//           | 'inv' '(' expr ')'
//           | 'gn' int '(' expr ';' expr (',' expr)* ')'
//
// Variables are a lowercase letter followed by digits (x1, y2). Any other
// identifier is a named constant; `I` is the identity unless rebound. An
// integer literal k stands for k times the identity.

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/capelli.hpp"
#include "maxsub/matrix.hpp"
#include "maxsub/random.hpp"

namespace maxsub::gri {

enum class NodeKind { Var, Name, Literal, Add, Sub, Mul, Neg, Inv, Pow, Gn };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  std::string text;            // identifier for Var/Name, decimal digits for Literal
  long long exponent = 0;      // Pow
  std::size_t gn_n = 0;        // Gn
  std::vector<Expr> children;  // Gn: x, then y_1 ... y_n
};

inline Expr make(NodeKind kind, std::vector<Expr> children = {}, std::string text = {}, long long exponent = 0, std::size_t gn_n = 0) {
  return std::make_shared<const Node>(Node{kind, std::move(text), exponent, gn_n, std::move(children)});
}

inline Expr var(std::string name) { return make(NodeKind::Var, {}, std::move(name)); }
inline Expr name(std::string id) { return make(NodeKind::Name, {}, std::move(id)); }
inline Expr literal(std::string digits) { return make(NodeKind::Literal, {}, std::move(digits)); }
inline Expr add(Expr a, Expr b) { return make(NodeKind::Add, {std::move(a), std::move(b)}); }
inline Expr sub(Expr a, Expr b) { return make(NodeKind::Sub, {std::move(a), std::move(b)}); }
inline Expr mul(Expr a, Expr b) { return make(NodeKind::Mul, {std::move(a), std::move(b)}); }
inline Expr neg(Expr a) { return make(NodeKind::Neg, {std::move(a)}); }
inline Expr inv(Expr a) { return make(NodeKind::Inv, {std::move(a)}); }
inline Expr pow(Expr a, long long k) { return make(NodeKind::Pow, {std::move(a)}, {}, k); }
inline Expr gn(std::size_t n, Expr x, std::vector<Expr> ys) {
  std::vector<Expr> children{std::move(x)};
  for (auto& y : ys) children.push_back(std::move(y));
  return make(NodeKind::Gn, std::move(children), {}, 0, n);
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind || a->text != b->text || a->exponent != b->exponent || a->gn_n != b->gn_n) return false;
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

inline void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e->kind == NodeKind::Var) out.insert(e->text);
  for (const auto& c : e->children) collect_variables(c, out);
}

inline std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  collect_variables(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

// 0: sum, 1: product, 2: negation, 3: power, 4: atom
inline int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 0;
    case NodeKind::Mul: return 1;
    case NodeKind::Neg: return 2;
    case NodeKind::Pow: return 3;
    default: return 4;
  }
}

inline std::string print_at(const Expr& e, int min_level);

inline std::string print_node(const Expr& e) {
  switch (e->kind) {
    case NodeKind::Var:
    case NodeKind::Name:
    case NodeKind::Literal: return e->text;
    case NodeKind::Add: return print_at(e->children[0], 0) + " + " + print_at(e->children[1], 1);
    case NodeKind::Sub: return print_at(e->children[0], 0) + " - " + print_at(e->children[1], 1);
    case NodeKind::Mul: return print_at(e->children[0], 1) + "*" + print_at(e->children[1], 2);
    case NodeKind::Neg: return "-" + print_at(e->children[0], 2);
    case NodeKind::Inv: return "inv(" + print_at(e->children[0], 0) + ")";
    case NodeKind::Pow: return print_at(e->children[0], 4) + "^" + std::to_string(e->exponent);
    case NodeKind::Gn: {
      std::string out = "gn" + std::to_string(e->gn_n) + "(" + print_at(e->children[0], 0) + ";";
      for (std::size_t i = 1; i < e->children.size(); ++i) out += (i == 1 ? " " : ", ") + print_at(e->children[i], 0);
      return out + ")";
    }
  }
  return {};
}

inline std::string print_at(const Expr& e, int min_level) {
  std::string s = print_node(e);
  return precedence(e->kind) < min_level ? "(" + s + ")" : s;
}

}  // namespace detail

/// Canonical text; parse(print(e)) is structurally equal to e.
inline std::string print(const Expr& e) { return detail::print_at(e, 0); }

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace detail {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Semi, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const unsigned char ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    const std::size_t l = line, c = column;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      default: throw SyntaxError(l, c, "unexpected character '" + std::string(1, static_cast<char>(ch)) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(ch)), l, c});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

inline bool is_variable_name(std::string_view id) {
  if (id.size() < 2 || !std::islower(static_cast<unsigned char>(id[0]))) return false;
  for (std::size_t k = 1; k < id.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(id[k]))) return false;
  return true;
}

inline bool is_gn_name(std::string_view id) {
  if (id.size() < 3 || id.substr(0, 2) != "gn") return false;
  for (std::size_t k = 2; k < id.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(id[k]))) return false;
  return true;
}

inline std::string canonical_digits(const std::string& digits) {
  std::size_t k = 0;
  while (k + 1 < digits.size() && digits[k] == '0') ++k;
  return digits.substr(k);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(peek().line, peek().column, message); }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what) + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    ++pos_;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = take().kind == Tok::Plus;
      Expr rhs = term();
      lhs = plus ? add(lhs, rhs) : sub(lhs, rhs);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Tok::Star) {
      take();
      lhs = mul(lhs, unary());
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return neg(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek().kind != Tok::Caret) return base;
    take();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Int) fail("expected integer exponent");
    const std::string digits = canonical_digits(take().text);
    if (digits.size() > 18) fail("exponent too large");
    const long long k = std::stoll(digits);
    return pow(base, negative ? -k : k);
  }

  Expr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Int: take(); return literal(canonical_digits(tok.text));
      case Tok::LParen: {
        take();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        const std::string id = take().text;
        if (id == "inv") {
          expect(Tok::LParen, "'(' after inv");
          Expr inner = expr();
          expect(Tok::RParen, "')'");
          return inv(inner);
        }
        if (is_gn_name(id)) return gn_call(id);
        if (is_variable_name(id)) return var(id);
        return name(id);
      }
      default: fail(tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  Expr gn_call(const std::string& id) {
    const std::string digits = canonical_digits(id.substr(2));
    if (digits.size() > 6) fail("gn index too large");
    const std::size_t n = std::stoul(digits);
    if (n == 0) fail("gn needs n >= 1");
    expect(Tok::LParen, "'(' after " + id);
    Expr x = expr();
    expect(Tok::Semi, "';' after the x argument of " + id);
    std::vector<Expr> ys{expr()};
    while (peek().kind == Tok::Comma) {
      take();
      ys.push_back(expr());
    }
    if (ys.size() != n) fail(id + " takes " + std::to_string(n) + " y-arguments, got " + std::to_string(ys.size()));
    expect(Tok::RParen, "')'");
    return gn(n, x, std::move(ys));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

struct Substitution {
  Field field;
  std::size_t size = 0;
  std::map<std::string, Matrix> variables;
  std::map<std::string, Matrix> constants;
};

/// The substitution is excluded: some inversion along the evaluation hit a
/// singular matrix. `path` lists child indices from the root to that node.
struct NotPermissible {
  std::vector<std::size_t> path;
  std::string subexpression;
};

struct EvalOutcome {
  std::optional<Matrix> value;
  std::optional<NotPermissible> not_permissible;

  bool permissible() const { return value.has_value(); }
};

namespace detail {

struct NotPermissibleSignal {
  NotPermissible info;
};

class Evaluator {
 public:
  explicit Evaluator(const Substitution& s) : s_(s) {}

  Matrix eval(const Expr& e) {
    switch (e->kind) {
      case NodeKind::Var: {
        auto it = s_.variables.find(e->text);
        if (it == s_.variables.end()) throw Error(ErrorCode::MissingVariable, "no binding for variable " + e->text);
        return it->second;
      }
      case NodeKind::Name: {
        auto it = s_.constants.find(e->text);
        if (it != s_.constants.end()) return it->second;
        if (e->text == "I") return Matrix::identity(s_.field, s_.size);
        throw Error(ErrorCode::MissingVariable, "unknown identifier " + e->text);
      }
      case NodeKind::Literal: return Matrix::scalar(s_.field.parse_scalar(e->text), s_.size);
      case NodeKind::Add: return child(e, 0) + child(e, 1);
      case NodeKind::Sub: return child(e, 0) - child(e, 1);
      case NodeKind::Mul: return child(e, 0) * child(e, 1);
      case NodeKind::Neg: return -child(e, 0);
      case NodeKind::Inv: return invert(e, child(e, 0));
      case NodeKind::Pow: {
        Matrix base = child(e, 0);
        if (e->exponent < 0) base = invert(e, base);
        const long long k = e->exponent < 0 ? -e->exponent : e->exponent;
        return power(base, static_cast<unsigned long long>(k));
      }
      case NodeKind::Gn: {
        Matrix x = child(e, 0);
        std::vector<Matrix> ys;
        for (std::size_t i = 1; i < e->children.size(); ++i) ys.push_back(child(e, i));
        return gn_eval_fast(e->gn_n, x, ys);
      }
    }
    throw Error(ErrorCode::SyntaxError, "unknown node kind");
  }

 private:
  Matrix child(const Expr& e, std::size_t i) {
    path_.push_back(i);
    Matrix m = eval(e->children[i]);
    path_.pop_back();
    return m;
  }

  Matrix invert(const Expr& at, const Matrix& m) {
    try {
      return inverse(m);
    } catch (const SingularError&) {
      throw NotPermissibleSignal{{path_, print(at)}};
    }
  }

  const Substitution& s_;
  std::vector<std::size_t> path_;
};

inline void check_binding(const Substitution& s, const std::string& label, const Matrix& m) {
  maxsub::detail::check_same_field(s.field, m.field());
  if (m.rows() != s.size || m.cols() != s.size)
    throw Error(ErrorCode::ShapeMismatch, label + " is " + m.shape_string() + ", expected " + std::to_string(s.size) + "x" + std::to_string(s.size));
}

}  // namespace detail

/// Bottom-up exact evaluation. Every singular inversion yields
/// NotPermissible rather than an error.
inline EvalOutcome evaluate(const Expr& e, const Substitution& s) {
  if (s.size == 0) throw Error(ErrorCode::ShapeMismatch, "substitution size must be positive");
  for (const auto& [k, m] : s.variables) detail::check_binding(s, k, m);
  for (const auto& [k, m] : s.constants) detail::check_binding(s, k, m);
  try {
    return EvalOutcome{detail::Evaluator(s).eval(e), std::nullopt};
  } catch (const detail::NotPermissibleSignal& signal) {
    return EvalOutcome{std::nullopt, signal.info};
  }
}

// ---------------------------------------------------------------------------
// Randomized identity testing

struct IdentityCertificate {
  std::size_t trial = 0;
  std::map<std::string, Matrix> bindings;
  Matrix value;
};

struct IdentityReport {
  Field field;
  std::size_t size = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t zero = 0;
  std::size_t nonzero = 0;
  std::size_t not_permissible = 0;
  /// Lowest-index nonzero substitution.
  std::optional<IdentityCertificate> certificate;

  bool plausible_identity() const { return nonzero == 0 && zero > 0; }

  std::string verdict() const {
    if (nonzero > 0) return "not an identity";
    if (zero > 0) return "plausible identity";
    return "inconclusive";
  }
};

/// Evaluates `e` at `trials` seeded random substitutions of size x size
/// matrices; trial t draws the variables, in sorted order, from Rng(seed ^ t).
inline IdentityReport identity_test(const Expr& e, std::size_t nvars, std::size_t size, const Field& field, std::size_t trials,
                                    std::uint64_t seed, const std::map<std::string, Matrix>& constants = {}) {
  if (trials == 0) throw Error(ErrorCode::BadParams, "identity_test needs trials >= 1");
  if (size == 0) throw Error(ErrorCode::BadParams, "matrix size must be positive");
  const auto vars = variables(e);
  if (vars.size() > nvars)
    throw Error(ErrorCode::BadParams, "expression has " + std::to_string(vars.size()) + " variables but --nvars is " + std::to_string(nvars));
  IdentityReport report;
  report.field = field;
  report.size = size;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    Substitution s{field, size, {}, constants};
    for (const auto& v : vars) s.variables.emplace(v, random_matrix(field, size, rng));
    EvalOutcome outcome = evaluate(e, s);
    if (!outcome.permissible()) {
      ++report.not_permissible;
    } else if (outcome.value->is_zero()) {
      ++report.zero;
    } else {
      ++report.nonzero;
      if (!report.certificate) report.certificate = IdentityCertificate{t, s.variables, *outcome.value};
    }
  }
  return report;
}

}  // namespace maxsub::gri
