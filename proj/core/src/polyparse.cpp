#include "motconf/polyparse.hpp"

#include <cctype>

namespace motconf {

namespace {

// Recursive-descent parser over a generic term builder. TermT must be a ring
// (default 0, +, -, *) with pow(unsigned).
template <typename TermT, typename AtomFn>
class ExprParser {
 public:
  ExprParser(const std::string& text, AtomFn atom) : text_(text), atom_(atom) {}

  TermT parse() {
    TermT v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  TermT expr() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (take() == '-') neg = !neg;
      skip_ws();
    }
    TermT v = term();
    if (neg) v = -v;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      char op = take();
      TermT rhs = term();
      v = (op == '+') ? v + rhs : v - rhs;
      skip_ws();
    }
    return v;
  }

  TermT term() {
    TermT v = factor();
    skip_ws();
    while (peek() == '*') {
      take();
      v = v * factor();
      skip_ws();
    }
    return v;
  }

  TermT factor() {
    TermT v = base();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      unsigned e = parse_uint();
      v = v.pow(e);
    }
    return v;
  }

  TermT base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      TermT v = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return v;
    }
    if (c == '-') {
      take();
      return -factor();
    }
    return atom_(*this);
  }

 public:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  bool try_take(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(take() - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<unsigned>(v);
  }
  Integer parse_integer() {
    skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.empty()) fail("expected integer");
    return Integer(digits);
  }
  std::string parse_ident() {
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      s += take();
    if (s.empty()) fail("expected identifier");
    return s;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                ": " + what + " in '" + text_ + "'");
  }

 private:
  const std::string& text_;
  AtomFn atom_;
  size_t pos_ = 0;
};

// Polynomial value type used during parsing of affine-system equations.
struct IntPolyValue {
  std::map<Monomial, Integer, GradedLexLess> terms;

  static IntPolyValue constant(Integer v) {
    IntPolyValue p;
    if (v != 0) p.terms.emplace(Monomial::one(), std::move(v));
    return p;
  }
  static IntPolyValue variable(int idx) {
    IntPolyValue p;
    p.terms.emplace(Monomial::variable(idx), 1);
    return p;
  }
  friend IntPolyValue operator+(const IntPolyValue& a, const IntPolyValue& b) {
    IntPolyValue out = a;
    for (const auto& [m, c] : b.terms) {
      auto [it, fresh] = out.terms.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
      }
    }
    return out;
  }
  IntPolyValue operator-() const {
    IntPolyValue out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, -c);
    return out;
  }
  friend IntPolyValue operator-(const IntPolyValue& a, const IntPolyValue& b) {
    return a + (-b);
  }
  friend IntPolyValue operator*(const IntPolyValue& a, const IntPolyValue& b) {
    IntPolyValue out;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Monomial m = ma * mb;
        Integer c = ca * cb;
        auto [it, fresh] = out.terms.emplace(std::move(m), c);
        if (!fresh) {
          it->second += c;
          if (it->second == 0) out.terms.erase(it);
        }
      }
    return out;
  }
  IntPolyValue pow(unsigned e) const {
    IntPolyValue acc = constant(1), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
};

}  // namespace

IntPolynomial parse_int_polynomial(const std::string& text,
                                   const std::vector<std::string>& vars) {
  auto atom = [&vars](auto& p) -> IntPolyValue {
    if (std::isdigit(static_cast<unsigned char>(p.peek())))
      return IntPolyValue::constant(p.parse_integer());
    std::string name = p.parse_ident();
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return IntPolyValue::variable(static_cast<int>(i + 1));
    p.fail("unknown variable '" + name + "'");
  };
  ExprParser<IntPolyValue, decltype(atom)> parser(text, atom);
  IntPolynomial out;
  out.vars = vars;
  out.terms = parser.parse().terms;
  out.source = text;
  return out;
}

CharPolynomial parse_charpoly(const std::string& text) {
  auto atom = [](auto& p) -> CharPolynomial {
    if (std::isdigit(static_cast<unsigned char>(p.peek())))
      return GradedPoly(Rational(p.parse_integer()));
    std::string name = p.parse_ident();
    if (name.size() > 1 && name[0] == 'X') {
      int idx = 0;
      for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
          p.fail("bad generator '" + name + "'");
        idx = idx * 10 + (name[i] - '0');
      }
      if (idx < 1) p.fail("generator index must be >= 1");
      return charpoly_generator(idx);
    }
    if (name == "binom") {
      p.skip_ws();
      if (!p.try_take('(')) p.fail("expected '(' after binom");
      p.skip_ws();
      std::string gen = p.parse_ident();
      if (gen.size() < 2 || gen[0] != 'X') p.fail("binom expects X<i>");
      int idx = std::stoi(gen.substr(1));
      p.skip_ws();
      if (!p.try_take(',')) p.fail("expected ',' in binom");
      unsigned n = p.parse_uint();
      p.skip_ws();
      if (!p.try_take(')')) p.fail("expected ')' in binom");
      std::vector<int> lbar(static_cast<size_t>(idx), 0);
      lbar[idx - 1] = static_cast<int>(n);
      return binomial_charpoly(lbar);
    }
    p.fail("unknown symbol '" + name + "'");
  };
  ExprParser<CharPolynomial, decltype(atom)> parser(text, atom);
  return parser.parse();
}

GeneralizedPartition parse_tau(const std::string& text) {
  std::vector<int> mults;
  std::vector<char> seen;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("parse_tau: expected a label letter in '" + text + "'");
    for (char s : seen)
      if (s == c)
        throw std::invalid_argument("parse_tau: repeated label '" +
                                    std::string(1, c) + "'");
    seen.push_back(c);
    ++i;
    int mult = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mult = mult * 10 + (text[i] - '0');
      ++i;
      if (mult > 1000) throw std::invalid_argument("parse_tau: multiplicity too large");
    }
    mults.push_back(mult == 0 ? 1 : mult);
  }
  return GeneralizedPartition(mults);
}

}  // namespace motconf
