#include "eorlicz/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace eorlicz {

// ---------------------------------------------------------------------------
// Node factories

ExprPtr Expr::literal(double v) {
  assert(std::isfinite(v) && v >= 0.0);  // negatives are built as negate(literal)
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kLiteral;
  e->literal_ = v;
  return e;
}

ExprPtr Expr::infinity() {
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kInfinity;
  return e;
}

ExprPtr Expr::variable(Var v) {
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kVariable;
  e->var_ = v;
  return e;
}

ExprPtr Expr::negate(ExprPtr child) {
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kNegate;
  e->children_ = {std::move(child)};
  return e;
}

ExprPtr Expr::binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kBinary;
  e->bin_op_ = op;
  e->children_ = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr Expr::call(Func f, std::vector<ExprPtr> args) {
  assert((f == Func::kMin || f == Func::kMax) ? args.size() == 2 : args.size() == 1);
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kCall;
  e->func_ = f;
  e->children_ = std::move(args);
  return e;
}

ExprPtr Expr::compare(CmpOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kCompare;
  e->cmp_op_ = op;
  e->children_ = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr Expr::piecewise(std::vector<ExprPtr> parts) {
  assert(parts.size() >= 3 && parts.size() % 2 == 1);
  auto e = std::shared_ptr<Expr>(new Expr);
  e->kind_ = Kind::kPiecewise;
  e->children_ = std::move(parts);
  return e;
}

ParseError::ParseError(std::size_t offset, const std::string& message, std::string expected)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Tokenizer + recursive-descent parser

namespace {

enum class Tok {
  kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret,
  kLParen, kRParen, kComma, kLt, kLe, kGt, kGe, kEq, kEnd,
};

struct Token {
  Tok tok;
  std::size_t offset;
  double number = 0.0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_.offset = pos_;
    cur_.ident.clear();
    if (pos_ >= src_.size()) {
      cur_.tok = Tok::kEnd;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = src_.data() + pos_;
      const char* end = src_.data() + src_.size();
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr == begin) {
        throw ParseError(pos_, "malformed number", "number");
      }
      cur_.tok = Tok::kNumber;
      cur_.number = value;
      pos_ += static_cast<std::size_t>(ptr - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_.tok = Tok::kIdent;
      cur_.ident = std::string(src_.substr(start, pos_ - start));
      return;
    }
    ++pos_;
    switch (c) {
      case '+': cur_.tok = Tok::kPlus; return;
      case '-': cur_.tok = Tok::kMinus; return;
      case '*': cur_.tok = Tok::kStar; return;
      case '/': cur_.tok = Tok::kSlash; return;
      case '^': cur_.tok = Tok::kCaret; return;
      case '(': cur_.tok = Tok::kLParen; return;
      case ')': cur_.tok = Tok::kRParen; return;
      case ',': cur_.tok = Tok::kComma; return;
      case '<':
        if (pos_ < src_.size() && src_[pos_] == '=') { ++pos_; cur_.tok = Tok::kLe; }
        else cur_.tok = Tok::kLt;
        return;
      case '>':
        if (pos_ < src_.size() && src_[pos_] == '=') { ++pos_; cur_.tok = Tok::kGe; }
        else cur_.tok = Tok::kGt;
        return;
      case '=':
        if (pos_ < src_.size() && src_[pos_] == '=') ++pos_;  // '==' accepted as '='
        cur_.tok = Tok::kEq;
        return;
      default:
        throw ParseError(cur_.offset, std::string("unexpected character '") + c + "'", "");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

const std::map<std::string, Expr::Func, std::less<>> kFunctions = {
    {"exp", Expr::Func::kExp},   {"ln", Expr::Func::kLn},   {"log", Expr::Func::kLn},
    {"abs", Expr::Func::kAbs},   {"cosh", Expr::Func::kCosh}, {"sqrt", Expr::Func::kSqrt},
    {"min", Expr::Func::kMin},   {"max", Expr::Func::kMax},
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.tok != Tok::kEnd) {
      throw ParseError(t.offset, "trailing input", "end of expression or operator");
    }
    return e;
  }

 private:
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      Tok t = lex_.peek().tok;
      if (t == Tok::kPlus || t == Tok::kMinus) {
        lex_.take();
        ExprPtr rhs = parse_term();
        lhs = Expr::binary(t == Tok::kPlus ? Expr::BinOp::kAdd : Expr::BinOp::kSub,
                           std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      Tok t = lex_.peek().tok;
      if (t == Tok::kStar || t == Tok::kSlash) {
        lex_.take();
        ExprPtr rhs = parse_factor();
        lhs = Expr::binary(t == Tok::kStar ? Expr::BinOp::kMul : Expr::BinOp::kDiv,
                           std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_factor() {
    if (lex_.peek().tok == Tok::kMinus) {
      lex_.take();
      return Expr::negate(parse_factor());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (lex_.peek().tok == Tok::kCaret) {
      lex_.take();
      ExprPtr exponent = parse_factor();  // right associative, unary minus allowed
      return Expr::binary(Expr::BinOp::kPow, std::move(base), std::move(exponent));
    }
    return base;
  }

  ExprPtr parse_primary() {
    Token t = lex_.take();
    switch (t.tok) {
      case Tok::kNumber:
        return Expr::literal(t.number);
      case Tok::kLParen: {
        ExprPtr e = parse_expr();
        expect(Tok::kRParen, ")");
        return e;
      }
      case Tok::kIdent: {
        if (t.ident == "t") return Expr::variable(Expr::Var::kT);
        if (t.ident == "u") return Expr::variable(Expr::Var::kU);
        if (t.ident == "p") return Expr::variable(Expr::Var::kP);
        if (t.ident == "inf") return Expr::infinity();
        if (t.ident == "piecewise") return parse_piecewise(t.offset);
        auto it = kFunctions.find(t.ident);
        if (it != kFunctions.end()) return parse_call(it->second);
        throw ParseError(t.offset, "unknown identifier '" + t.ident + "'",
                         "t, u, p, inf, or a function name");
      }
      default:
        throw ParseError(t.offset, "expected an operand",
                         "number, variable, function call, or '('");
    }
  }

  ExprPtr parse_call(Expr::Func f) {
    expect(Tok::kLParen, "(");
    std::vector<ExprPtr> args;
    args.push_back(parse_expr());
    if (f == Expr::Func::kMin || f == Expr::Func::kMax) {
      expect(Tok::kComma, ",");
      args.push_back(parse_expr());
    }
    expect(Tok::kRParen, ")");
    return Expr::call(f, std::move(args));
  }

  // piecewise(cond, value {, cond, value}, otherwise)
  ExprPtr parse_piecewise(std::size_t call_offset) {
    expect(Tok::kLParen, "(");
    std::vector<ExprPtr> items;
    items.push_back(parse_cond_or_expr());
    while (lex_.peek().tok == Tok::kComma) {
      lex_.take();
      items.push_back(parse_cond_or_expr());
    }
    expect(Tok::kRParen, ")");
    if (items.size() < 3 || items.size() % 2 == 0) {
      throw ParseError(call_offset, "piecewise needs condition/value pairs plus a final default",
                       "piecewise(cond, value, ..., otherwise)");
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      bool is_cond = items[i]->kind() == Expr::Kind::kCompare;
      bool want_cond = (i % 2 == 0) && (i + 1 != items.size());
      if (is_cond != want_cond) {
        throw ParseError(call_offset,
                         want_cond ? "piecewise expected a condition in this position"
                                   : "piecewise expected a value in this position",
                         "piecewise(cond, value, ..., otherwise)");
      }
    }
    return Expr::piecewise(std::move(items));
  }

  ExprPtr parse_cond_or_expr() {
    ExprPtr lhs = parse_expr();
    Tok t = lex_.peek().tok;
    Expr::CmpOp op;
    switch (t) {
      case Tok::kLt: op = Expr::CmpOp::kLt; break;
      case Tok::kLe: op = Expr::CmpOp::kLe; break;
      case Tok::kGt: op = Expr::CmpOp::kGt; break;
      case Tok::kGe: op = Expr::CmpOp::kGe; break;
      case Tok::kEq: op = Expr::CmpOp::kEq; break;
      default: return lhs;
    }
    lex_.take();
    ExprPtr rhs = parse_expr();
    return Expr::compare(op, std::move(lhs), std::move(rhs));
  }

  void expect(Tok tok, const char* what) {
    Token t = lex_.take();
    if (t.tok != tok) throw ParseError(t.offset, "unexpected token", what);
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse(std::string_view source) {
  if (source.empty()) throw ParseError(0, "empty expression", "an expression");
  return Parser(source).parse_all();
}

// ---------------------------------------------------------------------------
// Printer. Output reparses to a structurally identical tree; parentheses are
// inserted whenever a child binds looser than its position requires.

namespace {

// Precedence levels: 1 add/sub, 2 mul/div, 3 unary minus, 4 pow, 5 atoms.
int node_level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kBinary:
      switch (e.bin_op()) {
        case Expr::BinOp::kAdd:
        case Expr::BinOp::kSub: return 1;
        case Expr::BinOp::kMul:
        case Expr::BinOp::kDiv: return 2;
        case Expr::BinOp::kPow: return 4;
      }
      return 1;
    case Expr::Kind::kNegate: return 3;
    case Expr::Kind::kCompare: return 0;
    default: return 5;
  }
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

const char* func_name(Expr::Func f) {
  switch (f) {
    case Expr::Func::kExp: return "exp";
    case Expr::Func::kLn: return "ln";
    case Expr::Func::kAbs: return "abs";
    case Expr::Func::kCosh: return "cosh";
    case Expr::Func::kSqrt: return "sqrt";
    case Expr::Func::kMin: return "min";
    case Expr::Func::kMax: return "max";
  }
  return "?";
}

const char* cmp_name(Expr::CmpOp op) {
  switch (op) {
    case Expr::CmpOp::kLt: return "<";
    case Expr::CmpOp::kLe: return "<=";
    case Expr::CmpOp::kGt: return ">";
    case Expr::CmpOp::kGe: return ">=";
    case Expr::CmpOp::kEq: return "=";
  }
  return "?";
}

void print_node(const Expr& e, int min_level, std::string& out) {
  bool parens = node_level(e) < min_level;
  if (parens) out += '(';
  switch (e.kind()) {
    case Expr::Kind::kLiteral:
      out += format_double(e.literal_value());
      break;
    case Expr::Kind::kInfinity:
      out += "inf";
      break;
    case Expr::Kind::kVariable:
      out += e.variable() == Expr::Var::kT ? 't' : e.variable() == Expr::Var::kU ? 'u' : 'p';
      break;
    case Expr::Kind::kNegate:
      out += '-';
      print_node(*e.children()[0], 3, out);
      break;
    case Expr::Kind::kBinary: {
      const char* op = nullptr;
      int left_min = 0, right_min = 0;
      switch (e.bin_op()) {
        case Expr::BinOp::kAdd: op = "+"; left_min = 1; right_min = 2; break;
        case Expr::BinOp::kSub: op = "-"; left_min = 1; right_min = 2; break;
        case Expr::BinOp::kMul: op = "*"; left_min = 2; right_min = 3; break;
        case Expr::BinOp::kDiv: op = "/"; left_min = 2; right_min = 3; break;
        case Expr::BinOp::kPow: op = "^"; left_min = 5; right_min = 3; break;
      }
      print_node(*e.children()[0], left_min, out);
      out += op;
      print_node(*e.children()[1], right_min, out);
      break;
    }
    case Expr::Kind::kCall: {
      out += func_name(e.func());
      out += '(';
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ", ";
        print_node(*e.children()[i], 1, out);
      }
      out += ')';
      break;
    }
    case Expr::Kind::kCompare:
      print_node(*e.children()[0], 1, out);
      out += ' ';
      out += cmp_name(e.cmp_op());
      out += ' ';
      print_node(*e.children()[1], 1, out);
      break;
    case Expr::Kind::kPiecewise: {
      out += "piecewise(";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ", ";
        print_node(*e.children()[i], 0, out);
      }
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_node(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool eval_condition(const Expr& cond, const Env& env) {
  ExtReal lhs = eval(*cond.children()[0], env);
  ExtReal rhs = eval(*cond.children()[1], env);
  switch (cond.cmp_op()) {
    case Expr::CmpOp::kLt: return lhs < rhs;
    case Expr::CmpOp::kLe: return lhs <= rhs;
    case Expr::CmpOp::kGt: return lhs > rhs;
    case Expr::CmpOp::kGe: return lhs >= rhs;
    case Expr::CmpOp::kEq: return lhs == rhs;
  }
  return false;
}

}  // namespace

ExtReal eval(const Expr& e, const Env& env) {
  switch (e.kind()) {
    case Expr::Kind::kLiteral:
      return ExtReal(e.literal_value());
    case Expr::Kind::kInfinity:
      return ExtReal::infinity();
    case Expr::Kind::kVariable:
      switch (e.variable()) {
        case Expr::Var::kT: return env.t;
        case Expr::Var::kU: return env.u;
        case Expr::Var::kP:
          if (!env.p) throw EvalError("parameter p is not bound");
          return ExtReal(*env.p);
      }
      throw EvalError("unbound variable");
    case Expr::Kind::kNegate:
      return -eval(*e.children()[0], env);
    case Expr::Kind::kBinary: {
      ExtReal lhs = eval(*e.children()[0], env);
      ExtReal rhs = eval(*e.children()[1], env);
      switch (e.bin_op()) {
        case Expr::BinOp::kAdd: return lhs + rhs;
        case Expr::BinOp::kSub: return lhs - rhs;
        case Expr::BinOp::kMul: return lhs * rhs;
        case Expr::BinOp::kDiv: return lhs / rhs;
        case Expr::BinOp::kPow: return pow(lhs, rhs);
      }
      throw EvalError("unknown binary operator");
    }
    case Expr::Kind::kCall: {
      ExtReal a = eval(*e.children()[0], env);
      switch (e.func()) {
        case Expr::Func::kExp: return exp(a);
        case Expr::Func::kLn: return ln(a);
        case Expr::Func::kAbs: return abs(a);
        case Expr::Func::kCosh: return cosh(a);
        case Expr::Func::kSqrt: return sqrt(a);
        case Expr::Func::kMin: return min(a, eval(*e.children()[1], env));
        case Expr::Func::kMax: return max(a, eval(*e.children()[1], env));
      }
      throw EvalError("unknown function");
    }
    case Expr::Kind::kCompare:
      throw EvalError("comparison outside piecewise");
    case Expr::Kind::kPiecewise: {
      const auto& parts = e.children();
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
        if (eval_condition(*parts[i], env)) return eval(*parts[i + 1], env);
      }
      return eval(*parts.back(), env);
    }
  }
  throw EvalError("unknown node kind");
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::kLiteral:
      if (a.literal_value() != b.literal_value()) return false;
      break;
    case Expr::Kind::kVariable:
      if (a.variable() != b.variable()) return false;
      break;
    case Expr::Kind::kBinary:
      if (a.bin_op() != b.bin_op()) return false;
      break;
    case Expr::Kind::kCall:
      if (a.func() != b.func()) return false;
      break;
    case Expr::Kind::kCompare:
      if (a.cmp_op() != b.cmp_op()) return false;
      break;
    default:
      break;
  }
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!structurally_equal(*a.children()[i], *b.children()[i])) return false;
  }
  return true;
}

}  // namespace eorlicz
