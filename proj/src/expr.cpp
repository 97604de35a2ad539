#include "toroidal/expr.hpp"

#include <cctype>
#include <optional>

namespace toroidal {

namespace {

class Parser {
public:
  Parser(std::string_view text, const LatticeContext *ctx) : s_(text), ctx_(ctx) {}

  LocalField parse_all() {
    LocalField v = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size())
      return false;
    const char c = s_[pos_];
    return c == ':' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           s_.substr(pos_, 5) == "sqrt2";
  }

  LocalField expr() {
    LocalField acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    LocalField t = term();
    acc = neg ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  LocalField term() {
    LocalField acc = factor();
    while (true) {
      const std::size_t at = pos_;
      if (accept('*')) {
        acc = multiply(acc, factor(), at);
      } else if (accept('/')) {
        const std::size_t den_at = pos_;
        LocalField d = factor();
        if (!d.is_scalar())
          throw ParseError(den_at, "cannot divide by a field");
        if (d.id_part().is_zero())
          throw ParseError(den_at, "division by zero");
        acc *= Coeff(1) / d.id_part();
      } else if (starts_factor()) {
        acc = multiply(acc, factor(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  static LocalField multiply(const LocalField &a, const LocalField &b, std::size_t at) {
    if (a.is_scalar())
      return a.id_part() * b;
    if (b.is_scalar())
      return b.id_part() * a;
    throw ParseError(at, "product of two fields; write normal-ordered products as :a b:");
  }

  LocalField factor() {
    skip_ws();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    if (accept('-'))
      return -factor();
    if (accept('(')) {
      LocalField v = expr();
      expect(')');
      return v;
    }
    if (accept(':')) {
      LinField a = label();
      LinField b = label();
      expect(':');
      return normal_quad(a, b);
    }
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return LocalField::identity(Coeff::sqrt2());
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return LocalField::identity(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail("expected a number, sqrt2, '(' or ':'");
  }

  int index_arg() {
    expect('(');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an index");
    const int i = std::stoi(std::string(s_.substr(start, pos_ - start)));
    expect(')');
    return i;
  }

  LinField label() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name.empty())
      fail("expected a field label");
    if (pos_ < s_.size() && s_[pos_] == '*') {
      name += '*';
      ++pos_;
    }
    std::optional<AtomicLabel> atom;
    if (name == "eps")
      atom = AtomicLabel::eps(index_arg());
    else if (name == "eps*")
      atom = AtomicLabel::eps_star(index_arg());
    else if (name == "epsbar")
      atom = AtomicLabel::eps_bar(index_arg());
    else if (name == "epsbar*")
      atom = AtomicLabel::eps_bar_star(index_arg());
    else if (name == "cbar")
      atom = AtomicLabel::cbar();
    else if (name == "cbar*")
      atom = AtomicLabel::cbar_star();
    else if (name == "e")
      atom = AtomicLabel::ghost();
    if (atom) {
      if (ctx_ && !ctx_->has_label(*atom))
        throw ParseError(start, "label " + atom->str() + " is not in the alphabet of " +
                                    ctx_->name());
      return *atom;
    }
    if (name == "beta" || name == "beta*" || name == "betabar" || name == "betabar*") {
      if (!ctx_)
        throw ParseError(start, "compound label " + name + " needs a lattice context");
      const bool star = name.back() == '*';
      if (name.rfind("betabar", 0) == 0) {
        if (ctx_->type() != AlgType::C)
          throw ParseError(start, "betabar exists only in type C");
        return beta_bar_field(*ctx_, star);
      }
      return beta_field(*ctx_, star);
    }
    throw ParseError(start, "unknown label '" + name + "'");
  }

  std::string_view s_;
  const LatticeContext *ctx_;
  std::size_t pos_ = 0;
};

bool negative_leading(const Coeff &c) {
  if (!c.rational_part().is_zero())
    return c.rational_part().sign() < 0;
  return c.sqrt2_part().sign() < 0;
}

// Appends one signed term; `body` is empty for the scalar term.
void append_term(std::string &out, const Coeff &c, const std::string &body) {
  const bool first = out.empty();
  const bool mixed = !c.rational_part().is_zero() && !c.sqrt2_part().is_zero();
  Coeff mag = c;
  bool neg = false;
  if (!mixed && negative_leading(c)) {
    neg = true;
    mag = -c;
  }
  if (first)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (body.empty()) {
    out += mixed ? "(" + mag.str() + ")" : mag.str();
    return;
  }
  if (mixed)
    out += "(" + mag.str() + ")*";
  else if (mag != Coeff(1))
    out += mag.str() + "*";
  out += body;
}

} // namespace

LocalField parse_local_field(std::string_view text, const LatticeContext &ctx) {
  return Parser(text, &ctx).parse_all();
}

Coeff parse_coeff(std::string_view text) {
  LocalField f = Parser(text, nullptr).parse_all();
  if (!f.is_scalar())
    throw ParseError(0, "expected a scalar");
  return f.id_part();
}

std::string to_expr(const LocalField &f) {
  std::string out;
  if (!f.id_part().is_zero())
    append_term(out, f.id_part(), "");
  for (const auto &[m, c] : f.quad_part())
    append_term(out, c, ":" + m.u.str() + " " + m.v.str() + ":");
  return out.empty() ? "0" : out;
}

std::string to_expr(const BracketResult &r) {
  if (r.is_zero())
    return "0";
  return "delta: " + to_expr(r.delta_part) + ", d_delta: " + r.ddelta_part.str();
}

} // namespace toroidal
