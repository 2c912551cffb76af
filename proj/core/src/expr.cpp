#include "qaw/expr.hpp"

#include <array>
#include <cassert>
#include <cctype>

namespace qaw {
namespace {

struct Token {
  enum Type { Number, Q, Gen, Central, Hall, Plus, Minus, Star, Slash, Caret, LParen, RParen,
              LBracket, RBracket, Comma, End };
  Type type;
  size_t offset;
  BigInt number;
  char gen = 0;
  int central = 0;
  int hall = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.type = Token::End;
      return;
    }
    char c = text_[pos_];
    auto two = text_.substr(pos_, 2);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t e = pos_;
      while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
      tok_.type = Token::Number;
      tok_.number = BigInt(std::string(text_.substr(pos_, e - pos_)), 10);
      pos_ = e;
      return;
    }
    switch (c) {
      case '+': tok_.type = Token::Plus; ++pos_; return;
      case '-': tok_.type = Token::Minus; ++pos_; return;
      case '*': tok_.type = Token::Star; ++pos_; return;
      case '/': tok_.type = Token::Slash; ++pos_; return;
      case '^': tok_.type = Token::Caret; ++pos_; return;
      case '(': tok_.type = Token::LParen; ++pos_; return;
      case ')': tok_.type = Token::RParen; ++pos_; return;
      case '[': tok_.type = Token::LBracket; ++pos_; return;
      case ']': tok_.type = Token::RBracket; ++pos_; return;
      case ',': tok_.type = Token::Comma; ++pos_; return;
      case 'q': tok_.type = Token::Q; ++pos_; return;
      case 'A': case 'B': case 'C':
        tok_.type = Token::Gen;
        tok_.gen = c;
        ++pos_;
        return;
      case 'H': {
        size_t e = pos_ + 1;
        while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
        if (e == pos_ + 1) throw SyntaxError(pos_ + 1, "digits after H");
        tok_.type = Token::Hall;
        tok_.hall = std::stoi(std::string(text_.substr(pos_ + 1, e - pos_ - 1)));
        pos_ = e;
        return;
      }
      default: break;
    }
    if (two == "al") { tok_.type = Token::Central; tok_.central = 0; pos_ += 2; return; }
    if (two == "be") { tok_.type = Token::Central; tok_.central = 1; pos_ += 2; return; }
    if (two == "ga") { tok_.type = Token::Central; tok_.central = 2; pos_ += 2; return; }
    if (two == "Om") { tok_.type = Token::Central; tok_.central = 3; pos_ += 2; return; }
    // UTF-8 aliases: alpha, beta, gamma, Omega
    if (two == "\xce\xb1") { tok_.type = Token::Central; tok_.central = 0; pos_ += 2; return; }
    if (two == "\xce\xb2") { tok_.type = Token::Central; tok_.central = 1; pos_ += 2; return; }
    if (two == "\xce\xb3") { tok_.type = Token::Central; tok_.central = 2; pos_ += 2; return; }
    if (two == "\xce\xa9") { tok_.type = Token::Central; tok_.central = 3; pos_ += 2; return; }
    throw SyntaxError(pos_, "a number, q, A, B, C, al, be, ga, Om, H<n>, '(', '[' or an operator");
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token tok_;
};

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = k;
  e.a = std::move(a);
  e.b = std::move(b);
  return make(std::move(e));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    if (lex_.peek().type != Token::End)
      throw SyntaxError(lex_.peek().offset, "end of input or an operator");
    return e;
  }

 private:
  static bool starts_atom(Token::Type t) {
    switch (t) {
      case Token::Number: case Token::Q: case Token::Gen: case Token::Central:
      case Token::Hall: case Token::LParen: case Token::LBracket:
        return true;
      default:
        return false;
    }
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      bool plus = lex_.take().type == Token::Plus;
      ExprPtr rhs = parse_term();
      e = binary(plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e), std::move(rhs));
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    for (;;) {
      Token::Type t = lex_.peek().type;
      if (t == Token::Star || t == Token::Slash) {
        bool mul = lex_.take().type == Token::Star;
        ExprPtr rhs = parse_factor();
        e = binary(mul ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e), std::move(rhs));
      } else if (starts_atom(t)) {
        ExprPtr rhs = parse_factor();  // juxtaposition
        e = binary(Expr::Kind::Mul, std::move(e), std::move(rhs));
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_factor() {
    if (lex_.peek().type == Token::Minus) {
      lex_.take();
      ExprPtr inner = parse_factor();
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.a = std::move(inner);
      return make(std::move(e));
    }
    ExprPtr atom = parse_atom();
    if (lex_.peek().type == Token::Caret) {
      lex_.take();
      long sign = 1;
      if (lex_.peek().type == Token::Minus) {
        lex_.take();
        sign = -1;
      }
      if (lex_.peek().type != Token::Number)
        throw SyntaxError(lex_.peek().offset, "an integer exponent");
      Token t = lex_.take();
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.exponent = sign * t.number.get_si();
      e.a = std::move(atom);
      return make(std::move(e));
    }
    return atom;
  }

  ExprPtr parse_atom() {
    Token t = lex_.peek();
    switch (t.type) {
      case Token::Number: {
        lex_.take();
        Expr e;
        e.kind = Expr::Kind::Number;
        e.number = t.number;
        return make(std::move(e));
      }
      case Token::Q: {
        lex_.take();
        Expr e;
        e.kind = Expr::Kind::Q;
        return make(std::move(e));
      }
      case Token::Gen: {
        lex_.take();
        Expr e;
        e.kind = Expr::Kind::Gen;
        e.gen = t.gen;
        return make(std::move(e));
      }
      case Token::Central: {
        lex_.take();
        Expr e;
        e.kind = Expr::Kind::Central;
        e.central = t.central;
        return make(std::move(e));
      }
      case Token::Hall: {
        lex_.take();
        Expr e;
        e.kind = Expr::Kind::Hall;
        e.hall = t.hall;
        return make(std::move(e));
      }
      case Token::LParen: {
        lex_.take();
        ExprPtr e = parse_expr();
        if (lex_.peek().type != Token::RParen) throw SyntaxError(lex_.peek().offset, "')'");
        lex_.take();
        return e;
      }
      case Token::LBracket: {
        lex_.take();
        ExprPtr x = parse_expr();
        if (lex_.peek().type != Token::Comma) throw SyntaxError(lex_.peek().offset, "','");
        lex_.take();
        ExprPtr y = parse_expr();
        if (lex_.peek().type != Token::RBracket) throw SyntaxError(lex_.peek().offset, "']'");
        lex_.take();
        return binary(Expr::Kind::Bracket, std::move(x), std::move(y));
      }
      default:
        throw SyntaxError(t.offset, "a number, q, A, B, C, al, be, ga, Om, H<n>, '(' or '['");
    }
  }

  Lexer lex_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add: case Expr::Kind::Sub: return 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Mul: case Expr::Kind::Div: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string print(const Expr& e, int parent_prec) {
  int prec = precedence(e.kind);
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Number: s = e.number.get_str(); break;
    case Expr::Kind::Q: s = "q"; break;
    case Expr::Kind::Gen: s = std::string(1, e.gen); break;
    case Expr::Kind::Central: s = std::array{"al", "be", "ga", "Om"}[static_cast<size_t>(e.central)]; break;
    case Expr::Kind::Hall: s = "H" + std::to_string(e.hall); break;
    case Expr::Kind::Add: s = print(*e.a, prec) + " + " + print(*e.b, prec + 1); break;
    case Expr::Kind::Sub: s = print(*e.a, prec) + " - " + print(*e.b, prec + 1); break;
    case Expr::Kind::Mul: s = print(*e.a, prec) + "*" + print(*e.b, prec + 1); break;
    case Expr::Kind::Div: s = print(*e.a, prec) + "/" + print(*e.b, prec + 1); break;
    case Expr::Kind::Neg: s = "-" + print(*e.a, prec + 1); break;
    case Expr::Kind::Pow:
      s = print(*e.a, prec + 1) + "^" + std::to_string(e.exponent);
      break;
    case Expr::Kind::Bracket:
      s = "[" + print(*e.a, 0) + "," + print(*e.b, 0) + "]";
      break;
  }
  if (prec < parent_prec && e.kind != Expr::Kind::Bracket) return "(" + s + ")";
  return s;
}

/// Tagged value for evaluation: either a scalar or an element of the algebra E.
template <typename E>
struct Value {
  bool scalar = true;
  RatFunc c;
  E elem;
};

template <typename E, typename Ops>
Value<E> eval(const Expr& e, Ops& ops) {
  using V = Value<E>;
  auto as_elem = [&](const V& v) { return v.scalar ? ops.embed(v.c) : v.elem; };
  switch (e.kind) {
    case Expr::Kind::Number: return V{true, RatFunc(e.number), {}};
    case Expr::Kind::Q: return V{true, rf_q(), {}};
    case Expr::Kind::Gen: return V{false, {}, ops.gen(e.gen)};
    case Expr::Kind::Central: return V{false, {}, ops.central(e.central)};
    case Expr::Kind::Hall: return V{false, {}, ops.hall(e.hall)};
    case Expr::Kind::Add: {
      V a = eval<E>(*e.a, ops), b = eval<E>(*e.b, ops);
      if (a.scalar && b.scalar) return V{true, a.c + b.c, {}};
      return V{false, {}, as_elem(a) + as_elem(b)};
    }
    case Expr::Kind::Sub: {
      V a = eval<E>(*e.a, ops), b = eval<E>(*e.b, ops);
      if (a.scalar && b.scalar) return V{true, a.c - b.c, {}};
      return V{false, {}, as_elem(a) - as_elem(b)};
    }
    case Expr::Kind::Mul: {
      V a = eval<E>(*e.a, ops), b = eval<E>(*e.b, ops);
      if (a.scalar && b.scalar) return V{true, a.c * b.c, {}};
      if (a.scalar) return V{false, {}, b.elem * a.c};
      if (b.scalar) return V{false, {}, a.elem * b.c};
      return V{false, {}, ops.mul(a.elem, b.elem)};
    }
    case Expr::Kind::Div: {
      V a = eval<E>(*e.a, ops), b = eval<E>(*e.b, ops);
      if (!b.scalar) throw EvalError("division by a non-scalar");
      if (b.c.is_zero()) throw DivisionByZero();
      if (a.scalar) return V{true, a.c / b.c, {}};
      return V{false, {}, a.elem * b.c.inverse()};
    }
    case Expr::Kind::Neg: {
      V a = eval<E>(*e.a, ops);
      if (a.scalar) return V{true, -a.c, {}};
      return V{false, {}, -a.elem};
    }
    case Expr::Kind::Pow: {
      V a = eval<E>(*e.a, ops);
      if (a.scalar) return V{true, a.c.pow(e.exponent), {}};
      if (e.exponent < 0) throw EvalError("negative exponent on an algebra element");
      E r = ops.embed(RatFunc(1));
      for (long i = 0; i < e.exponent; ++i) r = ops.mul(r, a.elem);
      return V{false, {}, r};
    }
    case Expr::Kind::Bracket: {
      V a = eval<E>(*e.a, ops), b = eval<E>(*e.b, ops);
      if (a.scalar || b.scalar) {
        // brackets with scalars vanish
        return V{false, {}, ops.embed(RatFunc(0))};
      }
      return V{false, {}, ops.bracket(a.elem, b.elem)};
    }
  }
  throw EvalError("unreachable expression kind");
}

struct DeltaOps {
  Uaw& uaw;
  HallBasis& basis;
  UawElement embed(const RatFunc& c) { return UawElement::one() * c; }
  UawElement gen(char x) { return x == 'A' ? uaw.A() : x == 'B' ? uaw.B() : uaw.C(); }
  UawElement central(int c) {
    switch (c) {
      case 0: return uaw.alpha();
      case 1: return uaw.beta();
      case 2: return uaw.gamma();
      default: return uaw.omega();
    }
  }
  UawElement hall(int n) {
    if (n < 1) throw EvalError("Hall index must be positive");
    basis.ensure(8);
    while (n > basis.size()) basis.ensure(basis.max_len() + 1);
    return uaw.reduce(basis.expansion(n));
  }
  UawElement mul(const UawElement& a, const UawElement& b) { return uaw.mul(a, b); }
  UawElement bracket(const UawElement& a, const UawElement& b) { return uaw.bracket(a, b); }
};

struct FreeOps {
  HallBasis& basis;
  FreeElement embed(const RatFunc& c) { return FreeElement::one() * c; }
  FreeElement gen(char x) { return FreeElement::letter(x); }
  FreeElement central(int c) {
    switch (c) {
      case 0: return Uaw::alpha_free();
      case 1: return Uaw::beta_free();
      case 2: return Uaw::gamma_free();
      default: return Uaw::omega_free(0);
    }
  }
  FreeElement hall(int n) {
    if (n < 1) throw EvalError("Hall index must be positive");
    basis.ensure(8);
    while (n > basis.size()) basis.ensure(basis.max_len() + 1);
    return basis.expansion(n);
  }
  FreeElement mul(const FreeElement& a, const FreeElement& b) { return a * b; }
  FreeElement bracket(const FreeElement& a, const FreeElement& b) { return lie_bracket(a, b); }
};

struct ScalarOps {
  RatFunc embed(const RatFunc& c) { return c; }
  RatFunc gen(char) { throw EvalError("generator in a scalar context"); }
  RatFunc central(int) { throw EvalError("central generator in a scalar context"); }
  RatFunc hall(int) { throw EvalError("Hall element in a scalar context"); }
  RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
  RatFunc bracket(const RatFunc&, const RatFunc&) { return RatFunc(0); }
};

}  // namespace

std::string Expr::str() const { return print(*this, 0); }

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

UawElement eval_delta(const Expr& e, Uaw& uaw, HallBasis& basis) {
  DeltaOps ops{uaw, basis};
  auto v = eval<UawElement>(e, ops);
  return v.scalar ? ops.embed(v.c) : v.elem;
}

FreeElement eval_free(const Expr& e, HallBasis& basis) {
  FreeOps ops{basis};
  auto v = eval<FreeElement>(e, ops);
  return v.scalar ? ops.embed(v.c) : v.elem;
}

RatFunc eval_scalar(const Expr& e) {
  ScalarOps ops;
  auto v = eval<RatFunc>(e, ops);
  return v.scalar ? v.c : v.elem;
}

LieTreePtr to_lie_tree(const Expr& e, HallBasis& basis) {
  switch (e.kind) {
    case Expr::Kind::Gen: return LieTree::leaf(e.gen);
    case Expr::Kind::Bracket: return LieTree::node(to_lie_tree(*e.a, basis), to_lie_tree(*e.b, basis));
    case Expr::Kind::Hall: {
      if (e.hall < 1) throw EvalError("Hall index must be positive");
      basis.ensure(8);
      while (e.hall > basis.size()) basis.ensure(basis.max_len() + 1);
      return basis.tree(e.hall);
    }
    default:
      throw EvalError("expression is not a bracket tree");
  }
}

RatFunc parse_scalar(std::string_view text) { return eval_scalar(*parse_expr(text)); }

}  // namespace qaw
