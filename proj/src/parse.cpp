#include "witt/parse.hpp"

#include <cctype>
#include <variant>

namespace witt {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error("parse error at column " + std::to_string(position + 1) + ": expected " + join(expected) + ", found " +
            found),
      position_(position),
      expected_(std::move(expected)) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at column " + std::to_string(position + 1) + ": " + message), position_(position) {}

ArityError::ArityError(std::size_t position, const std::string& atom, std::size_t arity)
    : ParseError(position, "'" + atom + "' is outside the arity " + std::to_string(arity)) {}

namespace {

using Value = std::variant<Polynomial, Derivation>;

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    throw ParseError(pos_, std::move(expected), found());
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  void expect_end() {
    if (!at_end()) fail({"end of input"});
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    return std::string("'") + s_[pos_] + "'";
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// Digits with no leading whitespace skipping when `attached`.
  mpz_class read_integer(bool attached = false) {
    if (!attached) skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned read_small(const char* what) {
    const std::size_t start = (skip_ws(), pos_);
    mpz_class v = read_integer();
    if (v > 1000000) throw ParseError(start, std::string(what) + " is too large");
    return static_cast<unsigned>(v.get_ui());
  }

  std::string read_word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  /// ['+'|'-'] INT ['/' INT]
  Rational read_signed_rational() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Rational q = read_unsigned_rational();
    return negative ? Rational(-q) : q;
  }

  Rational read_unsigned_rational() {
    mpz_class num = read_integer();
    mpz_class den = 1;
    if (accept('/')) {
      const std::size_t at = (skip_ws(), pos_);
      den = read_integer();
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  char raw(std::size_t at) const { return at < s_.size() ? s_[at] : '\0'; }
  void advance() { ++pos_; }
  std::string_view slice(std::size_t from, std::size_t to) const { return s_.substr(from, to - from); }
  void seek(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t arity) : in_(text), arity_(arity) {}

  Value parse_all() {
    Value v = expr();
    in_.expect_end();
    return v;
  }

  Reader& reader() { return in_; }
  Value expr() {
    Value acc = signed_term();
    for (;;) {
      const char c = in_.peek();
      if (c != '+' && c != '-') return acc;
      const std::size_t at = in_.pos();
      in_.advance();
      Value rhs = signed_term();
      acc = combine(std::move(acc), std::move(rhs), c == '+' ? 1 : -1, at);
    }
  }

 private:
  Value signed_term() {
    bool negative = false;
    for (;;) {
      if (in_.accept('-'))
        negative = !negative;
      else if (!in_.accept('+'))
        break;
    }
    Value v = term();
    if (negative) std::visit([](auto& x) { x = -x; }, v);
    return v;
  }

  Value term() {
    Value acc = factor();
    while (in_.peek() == '*') {
      const std::size_t at = in_.pos();
      in_.advance();
      acc = multiply(std::move(acc), factor(), at);
    }
    return acc;
  }

  Value factor() {
    Value base = primary();
    if (in_.peek() != '^') return base;
    const std::size_t at = in_.pos();
    in_.advance();
    const unsigned e = in_.read_small("exponent");
    if (!std::holds_alternative<Polynomial>(base)) throw ParseError(at, "cannot raise a derivation to a power");
    return std::get<Polynomial>(base).pow(e);
  }

  Value primary() {
    const char c = in_.peek();
    if (in_.peek_digit()) return Polynomial::constant(arity_, in_.read_unsigned_rational());
    if (c == '(') {
      in_.advance();
      Value v = expr();
      in_.expect(')');
      return v;
    }
    if (c == 'x' || c == 'd') {
      const std::size_t at = in_.pos();
      in_.advance();
      if (!std::isdigit(static_cast<unsigned char>(in_.raw(in_.pos())))) in_.fail({"variable index"});
      mpz_class idx = in_.read_integer(true);
      const std::string atom = std::string(1, c) + idx.get_str();
      if (idx < 1 || idx > arity_) throw ArityError(at, atom, arity_);
      const auto k = static_cast<std::size_t>(idx.get_ui());
      if (c == 'x') return Polynomial::variable(arity_, k);
      return Derivation::partial(arity_, k);
    }
    in_.fail({"number", "variable", "'('"});
  }

  Value combine(Value a, Value b, int sign, std::size_t at) {
    if (a.index() != b.index()) throw ParseError(at, "cannot add a polynomial and a derivation");
    return std::visit(
        [&](auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          return sign > 0 ? Value(x + y) : Value(x - y);
        },
        a);
  }

  Value multiply(Value a, Value b, std::size_t at) {
    if (auto* p = std::get_if<Polynomial>(&a)) {
      if (auto* q = std::get_if<Polynomial>(&b)) return *p * *q;
      return *p * std::get<Derivation>(b);
    }
    if (auto* q = std::get_if<Polynomial>(&b)) return *q * std::get<Derivation>(a);
    throw ParseError(at, "cannot multiply two derivations");
  }

  Reader in_;
  std::size_t arity_;
};

void require_arity(std::size_t arity) {
  if (arity == 0) throw InvalidArgument("arity must be at least 1");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  require_arity(arity);
  Value v = ExpressionParser(text, arity).parse_all();
  if (auto* p = std::get_if<Polynomial>(&v)) return std::move(*p);
  throw ParseError(0, "expected a polynomial, found a derivation");
}

Derivation parse_derivation(std::string_view text, std::size_t arity) {
  require_arity(arity);
  Value v = ExpressionParser(text, arity).parse_all();
  if (auto* d = std::get_if<Derivation>(&v)) return std::move(*d);
  if (std::get<Polynomial>(v).is_zero()) return Derivation(arity);
  throw ParseError(0, "expected a derivation, found a nonzero polynomial");
}

std::vector<Polynomial> parse_tuple(std::string_view text) {
  // Count top-level components first; the arity is known only after that.
  Reader scan(text);
  scan.expect('(');
  const std::size_t open = scan.pos() - 1;
  std::size_t depth = 0, count = 1;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = open + 1; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) {
        close = i;
        break;
      }
      --depth;
    }
    if (c == ',' && depth == 0) ++count;
  }
  if (close == std::string_view::npos) throw ParseError(text.size(), {"')'"}, "end of input");

  ExpressionParser p(text, count);
  Reader& in = p.reader();
  in.seek(open + 1);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) in.expect(',');
    const std::size_t at = (in.skip_ws(), in.pos());
    Value v = p.expr();
    if (!std::holds_alternative<Polynomial>(v)) throw ParseError(at, "tuple components must be polynomials");
    out.push_back(std::get<Polynomial>(std::move(v)));
  }
  in.expect(')');
  in.expect_end();
  return out;
}

Rational parse_rational(std::string_view text) {
  Reader in(text);
  Rational q = in.read_signed_rational();
  in.expect_end();
  return q;
}

namespace {

TameGenerator read_generator(Reader& in) {
  in.skip_ws();
  const std::size_t at = in.pos();
  const std::string name = in.read_word();
  if (name == "s") {
    if (!std::isdigit(static_cast<unsigned char>(in.raw(in.pos())))) in.fail({"swap index"});
    return Swap{in.read_integer(true).get_ui()};
  }
  if (name == "t") {
    in.expect('(');
    const std::size_t qat = (in.skip_ws(), in.pos());
    Rational a = in.read_signed_rational();
    in.expect(')');
    if (a == 0) throw ParseError(qat, "scale factor must be nonzero");
    return Scale{a};
  }
  if (name == "psi") {
    in.expect('(');
    const unsigned p = in.read_small("shear power");
    in.expect(')');
    return Shear{p, 1};
  }
  if (name == "shear") {
    in.expect('(');
    const unsigned p = in.read_small("shear power");
    in.expect(',');
    Rational c = in.read_signed_rational();
    in.expect(')');
    return Shear{p, c};
  }
  in.seek(at);
  in.fail({"'s<i>'", "'t(a)'", "'psi(p)'", "'shear(p,c)'"});
}

}  // namespace

TameGenerator parse_generator(std::string_view text) {
  Reader in(text);
  TameGenerator g = read_generator(in);
  in.expect_end();
  return g;
}

std::vector<TameGenerator> parse_generators(std::string_view text) {
  Reader in(text);
  std::vector<TameGenerator> out;
  if (in.at_end()) return out;
  out.push_back(read_generator(in));
  while (in.accept(';')) out.push_back(read_generator(in));
  in.expect_end();
  return out;
}

TameWord parse_word(std::string_view text, std::size_t arity) { return TameWord(arity, parse_generators(text)); }

}  // namespace witt
