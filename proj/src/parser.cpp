#include "flagorder/parser.hpp"

#include <cctype>
#include <set>

#include "flagorder/errors.hpp"

namespace flagorder {

bool operator==(const Ast& a, const Ast& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.cycle == b.cycle &&
         a.exponent == b.exponent && a.children == b.children;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  Ast run() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Ast a = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
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
    if (!accept(c)) {
      fail(pos_ < text_.size() ? std::string("expected '") + c + "' but found '" + text_[pos_] + "'"
                               : std::string("expected '") + c + "' at end of input");
    }
  }

  static Ast binary(Ast::Kind k, Ast l, Ast r) {
    Ast a;
    a.kind = k;
    a.children.push_back(std::move(l));
    a.children.push_back(std::move(r));
    return a;
  }

  Ast expr() {
    Ast left = term();
    for (;;) {
      if (accept('+')) {
        left = binary(Ast::Kind::add, std::move(left), term());
      } else if (accept('-')) {
        left = binary(Ast::Kind::sub, std::move(left), term());
      } else {
        return left;
      }
    }
  }

  Ast term() {
    Ast left = unary();
    for (;;) {
      if (accept('*')) {
        left = binary(Ast::Kind::mul, std::move(left), unary());
      } else if (accept('/')) {
        left = binary(Ast::Kind::div, std::move(left), unary());
      } else {
        return left;
      }
    }
  }

  Ast unary() {
    if (accept('-')) {
      Ast a;
      a.kind = Ast::Kind::neg;
      a.children.push_back(unary());
      return a;
    }
    return power();
  }

  Ast power() {
    Ast base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const Integer e = natural();
      if (!e.fits_uint_p() || e > 1000) fail_at("exponent too large", at);
      Ast a;
      a.kind = Ast::Kind::pow;
      a.exponent = static_cast<unsigned>(e.get_ui());
      a.children.push_back(std::move(base));
      return a;
    }
    return base;
  }

  Integer natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string variable_name() {
    skip_ws();
    const std::size_t at = pos_;
    std::string name = identifier();
    if (!vars_.index_of(name)) fail_at("unknown variable '" + name + "'", at);
    return name;
  }

  Ast primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Ast inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Ast a;
      a.kind = Ast::Kind::number;
      a.value = Rat(natural());
      return a;
    }
    const std::size_t at = pos_;
    const std::string word = identifier();
    Ast a;
    if (word == "id") {
      a.kind = Ast::Kind::identity;
      return a;
    }
    if (word == "perm" || word == "sign" || word == "shift") {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '(') {
        if (vars_.index_of(word)) {
          a.kind = Ast::Kind::variable;
          a.name = word;
          return a;
        }
        fail("expected '(' after " + word);
      }
      ++pos_;
      if (word == "perm") {
        a.kind = Ast::Kind::perm;
        std::set<std::size_t> seen;
        skip_ws();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const std::size_t entry_at = pos_;
          const Integer v = natural();
          if (v < 1 || v > static_cast<long>(vars_.size())) {
            fail_at("cycle entry " + v.get_str() + " is out of range", entry_at);
          }
          const auto e = static_cast<std::size_t>(v.get_ui());
          if (!seen.insert(e).second) fail_at("cycle repeats entry " + v.get_str(), entry_at);
          a.cycle.push_back(e);
          skip_ws();
        }
        if (a.cycle.empty()) fail("empty cycle");
      } else if (word == "sign") {
        a.kind = Ast::Kind::sign;
        a.name = variable_name();
      } else {
        a.kind = Ast::Kind::shift;
        a.name = variable_name();
        expect(':');
        const bool negative = accept('-');
        if (!negative) accept('+');
        Rat v(natural());
        if (accept('/')) {
          const std::size_t den_at = pos_;
          const Integer d = natural();
          if (d == 0) fail_at("zero denominator", den_at);
          v /= Rat(d);
        }
        a.value = negative ? Rat(-v) : v;
      }
      expect(')');
      return a;
    }
    if (!vars_.index_of(word)) fail_at("unknown variable '" + word + "'", at);
    a.kind = Ast::Kind::variable;
    a.name = word;
    return a;
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

int precedence(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::add:
    case Ast::Kind::sub: return 1;
    case Ast::Kind::mul:
    case Ast::Kind::div: return 2;
    case Ast::Kind::neg: return 3;
    case Ast::Kind::pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Ast& a, int min_prec) {
  const std::string s = pretty(a);
  return precedence(a) >= min_prec ? s : "(" + s + ")";
}

}  // namespace

Ast parse(std::string_view input, const VarList& vars) { return Parser(input, vars).run(); }

std::string pretty(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number: return to_string(a.value);
    case Ast::Kind::variable: return a.name;
    case Ast::Kind::identity: return "id";
    case Ast::Kind::neg: return "-" + wrap(a.children[0], 3);
    case Ast::Kind::add: return wrap(a.children[0], 1) + " + " + wrap(a.children[1], 2);
    case Ast::Kind::sub: return wrap(a.children[0], 1) + " - " + wrap(a.children[1], 2);
    case Ast::Kind::mul: return wrap(a.children[0], 2) + "*" + wrap(a.children[1], 3);
    case Ast::Kind::div: return wrap(a.children[0], 2) + "/" + wrap(a.children[1], 3);
    case Ast::Kind::pow: return wrap(a.children[0], 5) + "^" + std::to_string(a.exponent);
    case Ast::Kind::perm: {
      std::string s = "perm(";
      for (std::size_t i = 0; i < a.cycle.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(a.cycle[i]);
      }
      return s + ")";
    }
    case Ast::Kind::sign: return "sign(" + a.name + ")";
    case Ast::Kind::shift: return "shift(" + a.name + ":" + to_string(a.value) + ")";
  }
  return "";
}

SkewElement to_skew(const Ast& a, const VarList& vars) {
  const std::size_t n = vars.size();
  auto child = [&](std::size_t k) { return to_skew(a.children[k], vars); };
  switch (a.kind) {
    case Ast::Kind::number: return SkewElement::scalar(RatFunc::constant(vars, a.value));
    case Ast::Kind::variable: return SkewElement::scalar(RatFunc(MultiPoly::variable(vars, a.name)));
    case Ast::Kind::identity: return SkewElement::one(vars);
    case Ast::Kind::neg: return -child(0);
    case Ast::Kind::add: return child(0) + child(1);
    case Ast::Kind::sub: return child(0) - child(1);
    case Ast::Kind::mul: return child(0) * child(1);
    case Ast::Kind::div: {
      const SkewElement d = child(1);
      if (!d.is_scalar()) throw DomainError("divisor '" + pretty(a.children[1]) + "' is not a scalar");
      if (d.is_zero()) throw ZeroDivisorError("division by zero in '" + pretty(a) + "'");
      return child(0) * SkewElement::scalar(d.coefficient(Automorphism::identity(n)).inverse());
    }
    case Ast::Kind::pow: {
      const SkewElement base = child(0);
      SkewElement r = SkewElement::one(vars);
      for (unsigned k = 0; k < a.exponent; ++k) r = r * base;
      return r;
    }
    case Ast::Kind::perm: {
      std::vector<std::size_t> zero_based;
      for (auto e : a.cycle) zero_based.push_back(e - 1);
      return SkewElement::group_element(vars, Automorphism::cycle(n, zero_based));
    }
    case Ast::Kind::sign:
      return SkewElement::group_element(vars, Automorphism::sign_flip(n, *vars.index_of(a.name)));
    case Ast::Kind::shift:
      return SkewElement::group_element(vars, Automorphism::shift(n, *vars.index_of(a.name), a.value));
  }
  throw Error("unknown syntax node");
}

SkewElement parse_skew(std::string_view input, const VarList& vars) {
  return to_skew(parse(input, vars), vars);
}

RatFunc parse_ratfunc(std::string_view input, const VarList& vars) {
  const SkewElement x = parse_skew(input, vars);
  if (!x.is_scalar()) throw DomainError("'" + std::string(input) + "' is not a rational function");
  return x.coefficient(Automorphism::identity(vars.size()));
}

MultiPoly parse_poly(std::string_view input, const VarList& vars) {
  const RatFunc f = parse_ratfunc(input, vars);
  if (!f.is_polynomial()) throw DomainError("'" + std::string(input) + "' is not a polynomial");
  return f.as_polynomial();
}

Automorphism parse_automorphism(std::string_view input, const VarList& vars) {
  const SkewElement x = parse_skew(input, vars);
  if (x.terms().size() != 1 || !(x.terms().begin()->second == RatFunc::constant(vars, 1))) {
    throw DomainError("'" + std::string(input) + "' is not an automorphism");
  }
  return x.terms().begin()->first;
}

std::vector<std::string> split_top_level(std::string_view input, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool any = false;
  for (char c : input) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
      any = true;
      continue;
    }
    cur += c;
  }
  const bool blank = cur.find_first_not_of(" \t\r\n") == std::string::npos;
  if (!blank || any) out.push_back(cur);
  for (auto& s : out) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  return out;
}

std::vector<Automorphism> parse_automorphism_list(std::string_view input, const VarList& vars) {
  std::vector<Automorphism> out;
  for (const auto& s : split_top_level(input)) out.push_back(parse_automorphism(s, vars));
  return out;
}

std::vector<MultiPoly> parse_poly_list(std::string_view input, const VarList& vars) {
  std::vector<MultiPoly> out;
  for (const auto& s : split_top_level(input)) out.push_back(parse_poly(s, vars));
  return out;
}

VarList parse_vars(std::string_view input) {
  std::vector<std::string> names;
  for (const auto& s : split_top_level(input)) {
    if (s.empty()) throw ParseError("empty variable name", 1, 1);
    for (char c : s) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("invalid variable name '" + s + "'", 1, 1);
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != '_') {
      throw ParseError("invalid variable name '" + s + "'", 1, 1);
    }
    if (s == "id" || s == "perm" || s == "sign" || s == "shift") {
      throw ParseError("reserved word '" + s + "' used as a variable", 1, 1);
    }
    names.push_back(s);
  }
  return VarList(std::move(names));
}

}  // namespace flagorder
