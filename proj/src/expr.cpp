#include "ord/expr.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

#include "ord/classic.hpp"
#include "ord/jacobsthal.hpp"
#include "ord/natural.hpp"
#include "ord/superjac.hpp"

namespace ord {

namespace {

std::string with_offset(const std::string& msg, size_t offset) {
  std::ostringstream os;
  os << msg << " at offset " << offset;
  return os.str();
}

}  // namespace

parse_error::parse_error(const std::string& msg, size_t offset_,
                         std::vector<std::string> expected_)
    : error(with_offset(msg, offset_)),
      offset(offset_),
      expected(std::move(expected_)) {}

eval_error::eval_error(const std::string& msg, size_t begin_, size_t end_)
    : error(msg), begin(begin_), end(end_) {}

namespace {

enum class Tok {
  Number,
  Omega,
  FuncName,
  LParen,
  RParen,
  Plus,
  NatPlus,
  NatMonus,
  Star,
  JacStar,
  NatStar,
  Caret,
  JacCaret,
  NatCaret,
  End,
};

struct Token {
  Tok kind;
  size_t begin;
  size_t end;
  Nat value;  // Number
  Func func;  // FuncName
};

const std::vector<std::string> kAtomExpected = {"number", "w",    "(",
                                                "deg",    "wdiv", "succ"};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  auto simple = [&](Tok k, size_t len) {
    out.push_back({k, i, i + len, 0, Func::Deg});
    i += len;
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      Token t{Tok::Number, start, i, Nat(std::string(text.substr(start, i - start))),
              Func::Deg};
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '(': simple(Tok::LParen, 1); continue;
      case ')': simple(Tok::RParen, 1); continue;
      case '+': simple(Tok::Plus, 1); continue;
      case '*': simple(Tok::Star, 1); continue;
      case '^': simple(Tok::Caret, 1); continue;
      case '#':
        if (i + 1 < text.size()) {
          switch (text[i + 1]) {
            case '+': simple(Tok::NatPlus, 2); continue;
            case '-': simple(Tok::NatMonus, 2); continue;
            case '*': simple(Tok::NatStar, 2); continue;
            case '^': simple(Tok::NatCaret, 2); continue;
          }
        }
        throw parse_error("expected one of '+', '-', '*', '^' after '#'", i + 1,
                          {"#+", "#-", "#*", "#^"});
      default: break;
    }
    if (c == 'j' && i + 1 < text.size() &&
        (text[i + 1] == '*' || text[i + 1] == '^')) {
      simple(text[i + 1] == '*' ? Tok::JacStar : Tok::JacCaret, 2);
      continue;
    }
    if (std::isalpha(c)) {
      size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
        ++i;
      std::string_view name = text.substr(start, i - start);
      if (name == "w") {
        out.push_back({Tok::Omega, start, i, 0, Func::Deg});
      } else if (name == "deg") {
        out.push_back({Tok::FuncName, start, i, 0, Func::Deg});
      } else if (name == "wdiv") {
        out.push_back({Tok::FuncName, start, i, 0, Func::WDiv});
      } else if (name == "succ") {
        out.push_back({Tok::FuncName, start, i, 0, Func::Succ});
      } else {
        throw parse_error("unknown name '" + std::string(name) + "'", start,
                          kAtomExpected);
      }
      continue;
    }
    // Unicode aliases: ω → w, × → j*, ⊕ → #+, ⊗ → #*.
    std::string_view rest = text.substr(i);
    if (rest.starts_with("\xCF\x89")) { simple(Tok::Omega, 2); continue; }
    if (rest.starts_with("\xC3\x97")) { simple(Tok::JacStar, 2); continue; }
    if (rest.starts_with("\xE2\x8A\x95")) { simple(Tok::NatPlus, 3); continue; }
    if (rest.starts_with("\xE2\x8A\x97")) { simple(Tok::NatStar, 3); continue; }
    throw parse_error("unexpected character", i, {});
  }
  out.push_back({Tok::End, text.size(), text.size(), 0, Func::Deg});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ExprAst run() {
    ExprAst e = additive();
    if (peek().kind != Tok::End)
      throw parse_error("unexpected token", peek().begin,
                        {"+", "#+", "#-", "*", "j*", "#*", "^", "j^", "#^", ")",
                         "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static ExprAst binary(BinaryOp op, ExprAst lhs, ExprAst rhs) {
    ExprAst node;
    node.kind = ExprAst::Kind::Binary;
    node.op = op;
    node.begin = lhs.begin;
    node.end = rhs.end;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprAst additive() {
    ExprAst lhs = multiplicative();
    if (peek().kind == Tok::NatMonus) {
      take();
      ExprAst node = binary(BinaryOp::NatMonus, std::move(lhs), multiplicative());
      if (peek().kind == Tok::Plus || peek().kind == Tok::NatPlus ||
          peek().kind == Tok::NatMonus)
        throw parse_error("'#-' does not chain; parenthesize", peek().begin,
                          {"*", "j*", "#*", "^", "j^", "#^", ")", "end of input"});
      return node;
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::NatPlus) {
      BinaryOp op =
          take().kind == Tok::Plus ? BinaryOp::OrdAdd : BinaryOp::NatAdd;
      lhs = binary(op, std::move(lhs), multiplicative());
      if (peek().kind == Tok::NatMonus)
        throw parse_error("'#-' does not chain; parenthesize", peek().begin,
                          {"+", "#+", "*", "j*", "#*", "^", "j^", "#^", ")",
                           "end of input"});
    }
    return lhs;
  }

  ExprAst multiplicative() {
    ExprAst lhs = exponent();
    while (true) {
      BinaryOp op;
      switch (peek().kind) {
        case Tok::Star: op = BinaryOp::OrdMul; break;
        case Tok::JacStar: op = BinaryOp::JacMul; break;
        case Tok::NatStar: op = BinaryOp::NatMul; break;
        default: return lhs;
      }
      take();
      lhs = binary(op, std::move(lhs), exponent());
    }
  }

  ExprAst exponent() {
    ExprAst base = atom();
    BinaryOp op;
    switch (peek().kind) {
      case Tok::Caret: op = BinaryOp::OrdPow; break;
      case Tok::JacCaret: op = BinaryOp::JacPow; break;
      case Tok::NatCaret: op = BinaryOp::SjPow; break;
      default: return base;
    }
    take();
    return binary(op, std::move(base), exponent());  // right-associative
  }

  ExprAst atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        Token tok = take();
        ExprAst node;
        node.kind = ExprAst::Kind::Literal;
        node.literal = std::move(tok.value);
        node.begin = tok.begin;
        node.end = tok.end;
        return node;
      }
      case Tok::Omega: {
        Token tok = take();
        ExprAst node;
        node.kind = ExprAst::Kind::Omega;
        node.begin = tok.begin;
        node.end = tok.end;
        return node;
      }
      case Tok::LParen: {
        Token open = take();
        ExprAst inner = additive();
        if (peek().kind != Tok::RParen)
          throw parse_error("expected ')'", peek().begin, {")"});
        Token close = take();
        inner.begin = open.begin;
        inner.end = close.end;
        return inner;
      }
      case Tok::FuncName: {
        Token name = take();
        if (peek().kind != Tok::LParen)
          throw parse_error("expected '(' after function name", peek().begin,
                            {"("});
        take();
        ExprAst arg = additive();
        if (peek().kind != Tok::RParen)
          throw parse_error("expected ')'", peek().begin, {")"});
        Token close = take();
        ExprAst node;
        node.kind = ExprAst::Kind::Call;
        node.func = name.func;
        node.begin = name.begin;
        node.end = close.end;
        node.children.push_back(std::move(arg));
        return node;
      }
      default:
        throw parse_error("expected an expression", t.begin, kAtomExpected);
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

ExprAst parse(std::string_view text) { return Parser(text).run(); }

Ordinal eval(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal:
      return Ordinal::finite(ast.literal);
    case ExprAst::Kind::Omega:
      return Ordinal::omega();
    case ExprAst::Kind::Binary: {
      Ordinal lhs = eval(ast.children[0]);
      Ordinal rhs = eval(ast.children[1]);
      try {
        switch (ast.op) {
          case BinaryOp::OrdAdd: return ord_add(lhs, rhs);
          case BinaryOp::NatAdd: return nat_add(lhs, rhs);
          case BinaryOp::NatMonus: return nat_ominus(lhs, rhs);
          case BinaryOp::OrdMul: return ord_mul(lhs, rhs);
          case BinaryOp::JacMul: return jac_mul(lhs, rhs);
          case BinaryOp::NatMul: return nat_mul(lhs, rhs);
          case BinaryOp::OrdPow: return ord_pow(lhs, rhs);
          case BinaryOp::JacPow: return jac_pow(lhs, rhs);
          case BinaryOp::SjPow: return sj_pow(lhs, rhs);
        }
      } catch (const eval_error&) {
        throw;
      } catch (const error& e) {
        throw eval_error(e.what(), ast.begin, ast.end);
      }
      throw eval_error("unreachable: unknown operator", ast.begin, ast.end);
    }
    case ExprAst::Kind::Call: {
      Ordinal arg = eval(ast.children[0]);
      try {
        switch (ast.func) {
          case Func::Deg: return deg(arg);
          case Func::WDiv: return omega_div(arg);
          case Func::Succ: return succ(arg);
        }
      } catch (const eval_error&) {
        throw;
      } catch (const error& e) {
        throw eval_error(e.what(), ast.begin, ast.end);
      }
      throw eval_error("unreachable: unknown function", ast.begin, ast.end);
    }
  }
  throw eval_error("unreachable: unknown node kind", ast.begin, ast.end);
}

namespace {

// Exponents render atomically: bare naturals and w stay as they are,
// everything else gets parentheses.
std::string print_exponent_atom(const Ordinal& e) {
  if (e.is_finite()) return e.as_nat().str();
  if (e == Ordinal::omega()) return "w";
  return "(" + print_text(e) + ")";
}

}  // namespace

std::string print_text(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    const Ordinal& e = t.exponent();
    if (e.is_zero()) {
      out += t.coeff().str();
      continue;
    }
    if (e == Ordinal::finite(1)) {
      out += "w";
    } else {
      out += "w^";
      out += print_exponent_atom(e);
    }
    if (t.coeff() != 1) {
      out += "*";
      out += t.coeff().str();
    }
  }
  return out;
}

std::string print_latex(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    const Ordinal& e = t.exponent();
    if (e.is_zero()) {
      out += t.coeff().str();
      continue;
    }
    out += "\\omega";
    if (e != Ordinal::finite(1)) {
      out += "^{";
      out += print_latex(e);
      out += "}";
    }
    if (t.coeff() != 1) {
      out += " \\cdot ";
      out += t.coeff().str();
    }
  }
  return out;
}

std::string print_json(const Ordinal& a) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += ",";
    first = false;
    out += "{\"exp\":";
    out += print_json(t.exponent());
    out += ",\"coeff\":\"";
    out += t.coeff().str();
    out += "\"}";
  }
  out += "]}";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << print_text(a);
}

}  // namespace ord
