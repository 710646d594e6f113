#include "chern/poly.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace chern {

template <class F>
PolyRing<F>::PolyRing(F field, std::vector<std::string> var_names)
    : field_(std::move(field)), names_(std::move(var_names)) {
  if (names_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw std::invalid_argument("invalid variable name '" + n + "'");
      }
    }
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

template <class F>
int PolyRing<F>::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

template <class F>
Poly<F> PolyRing<F>::constant(const Element& c) const {
  if (field_.is_zero(c)) return {};
  return Poly<F>({Term<F>{Monomial{}, 0, c}});
}

template <class F>
Poly<F> PolyRing<F>::variable(int i) const {
  if (i < 0 || i >= num_vars()) throw std::out_of_range("variable index out of range");
  return Poly<F>({Term<F>{Monomial::variable(i), 0, field_.one()}});
}

template <class F>
Poly<F> PolyRing<F>::monomial(const Monomial& m, const Element& c) const {
  if (field_.is_zero(c)) return {};
  return Poly<F>({Term<F>{m, 0, c}});
}

template <class F>
Poly<F> PolyRing<F>::pow(const Poly<F>& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Poly<F> result = from_integer(1);
  Poly<F> base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

template <class F>
std::optional<int> PolyRing<F>::total_degree(const Poly<F>& a) {
  if (a.is_zero()) return std::nullopt;
  int d = 0;
  for (const auto& t : a) d = std::max(d, t.mono.degree());
  return d;
}

template <class F>
bool PolyRing<F>::is_homogeneous(const Poly<F>& a) {
  for (const auto& t : a) {
    if (t.mono.degree() != a.lead().mono.degree()) return false;
  }
  return true;
}

namespace {

template <class F>
class Parser {
 public:
  Parser(const PolyRing<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly<F> parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Poly<F> p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Poly<F> expr() {
    Poly<F> acc;
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Poly<F> t = term();
    acc = negate ? ring_.neg(t) : t;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      Poly<F> next = term();
      acc = minus ? ring_.sub(acc, next) : ring_.add(acc, next);
    }
    return acc;
  }

  Poly<F> term() {
    Poly<F> acc = factor();
    while (peek('*') || peek('/')) {
      const bool divide = text_[pos_] == '/';
      const std::size_t at = pos_;
      ++pos_;
      Poly<F> rhs = factor();
      if (!divide) {
        acc = ring_.mul(acc, rhs);
        continue;
      }
      if (rhs.is_zero()) throw ParseError("division by zero", at);
      if (rhs.size() != 1 || !rhs.lead().mono.is_one()) {
        throw ParseError("only division by a constant is supported", at);
      }
      acc = ring_.scale(acc, ring_.field().inv(rhs.lead().coeff));
    }
    return acc;
  }

  int exponent() {
    skip();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected exponent", pos_);
    return static_cast<int>(v);
  }

  Poly<F> factor() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    Poly<F> base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& k = ring_.field();
      auto v = k.zero();
      const auto ten = k.from_integer(10);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = k.add(k.mul(v, ten), k.from_integer(text_[pos_] - '0'));
        ++pos_;
      }
      base = ring_.constant(v);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      const int idx = ring_.var_index(name);
      if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      base = ring_.variable(idx);
    } else {
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
    if (peek('^')) {
      ++pos_;
      base = ring_.pow(base, exponent());
    }
    return base;
  }

  const PolyRing<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Poly<F> PolyRing<F>::parse(std::string_view text) const {
  return Parser<F>(*this, text).parse();
}

template <class F>
std::string PolyRing<F>::monomial_string(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[static_cast<std::size_t>(i)];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

template <class F>
std::string PolyRing<F>::to_string(const Poly<F>& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a) {
    const bool negative = field_.is_negative(t.coeff);
    const auto mag = negative ? field_.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(t.mono);
    if (mono.empty()) {
      out += field_.to_string(mag);
    } else if (field_.is_one(mag)) {
      out += mono;
    } else {
      out += field_.to_string(mag) + '*' + mono;
    }
  }
  return out;
}

template <class F>
PolyRing<F> PolyRing<F>::extended(const std::vector<std::string>& extra_names) const {
  auto names = names_;
  names.insert(names.end(), extra_names.begin(), extra_names.end());
  return PolyRing<F>(field_, std::move(names));
}

template class PolyRing<PrimeField>;
template class PolyRing<RationalField>;

}  // namespace chern
