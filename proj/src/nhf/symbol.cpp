#include "nhf/symbol.hpp"

#include <cctype>
#include <cmath>

namespace nhf {

namespace {

cplx ipow(cplx z, int k) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// --- shorthand tokenizer/parser ---

struct Token {
  enum Kind { Number, Imag, D1, D2, Caret, Plus, Minus, LParen, RParen, End } kind;
  double value = 0.0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}
  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) return {Token::End};
    const char ch = s_[i_];
    if (ch == '+') { ++i_; return {Token::Plus}; }
    if (ch == '-') { ++i_; return {Token::Minus}; }
    if (ch == '(') { ++i_; return {Token::LParen}; }
    if (ch == ')') { ++i_; return {Token::RParen}; }
    if (ch == '^') { ++i_; return {Token::Caret}; }
    if (ch == 'i' || ch == 'j') { ++i_; return {Token::Imag}; }
    if (ch == 'd' && i_ + 1 < s_.size() && (s_[i_ + 1] == '1' || s_[i_ + 1] == '2')) {
      const Token t{s_[i_ + 1] == '1' ? Token::D1 : Token::D2};
      i_ += 2;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s_.substr(i_), &used);
      } catch (...) {
        throw Error(Status::parse, "operator shorthand: bad number near '" +
                                       s_.substr(i_, 8) + "'");
      }
      i_ += used;
      return {Token::Number, v};
    }
    throw Error(Status::parse, std::string("operator shorthand: unexpected '") +
                                   ch + "'");
  }
  Token peek() {
    const size_t save = i_;
    const Token t = next();
    i_ = save;
    return t;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

// (re), (re+im i), (re-im i), (im i) inside parentheses; opening '(' consumed.
cplx parse_paren_complex(Lexer& lex) {
  double sign = 1.0;
  Token t = lex.next();
  if (t.kind == Token::Minus) { sign = -1.0; t = lex.next(); }
  else if (t.kind == Token::Plus) { t = lex.next(); }
  cplx value(0.0, 0.0);
  if (t.kind == Token::Imag) {
    value = cplx(0.0, sign);
  } else {
    require(t.kind == Token::Number, Status::parse,
            "operator shorthand: number expected in parentheses");
    if (lex.peek().kind == Token::Imag) {
      lex.next();
      value = cplx(0.0, sign * t.value);
    } else {
      value = cplx(sign * t.value, 0.0);
      Token op = lex.peek();
      if (op.kind == Token::Plus || op.kind == Token::Minus) {
        lex.next();
        const double s2 = op.kind == Token::Plus ? 1.0 : -1.0;
        Token u = lex.next();
        double mag = 1.0;
        if (u.kind == Token::Number) {
          mag = u.value;
          u = lex.next();
        }
        require(u.kind == Token::Imag, Status::parse,
                "operator shorthand: imaginary unit expected");
        value += cplx(0.0, s2 * mag);
      }
    }
  }
  require(lex.next().kind == Token::RParen, Status::parse,
          "operator shorthand: ')' expected");
  return value;
}

}  // namespace

OperatorSpec OperatorSpec::from_shorthand(const std::string& text) {
  Lexer lex(text);
  OperatorSpec spec;
  double pending_sign = 1.0;
  Token t = lex.next();
  if (t.kind == Token::Plus) t = lex.next();
  else if (t.kind == Token::Minus) { pending_sign = -1.0; t = lex.next(); }
  while (true) {
    OpTerm term;
    term.coeff = cplx(pending_sign, 0.0);
    bool seen = false;
    while (true) {
      if (t.kind == Token::Number) {
        if (lex.peek().kind == Token::Imag) {
          lex.next();
          term.coeff *= cplx(0.0, t.value);
        } else {
          term.coeff *= t.value;
        }
        seen = true;
      } else if (t.kind == Token::Imag) {
        term.coeff *= cplx(0.0, 1.0);
        seen = true;
      } else if (t.kind == Token::LParen) {
        term.coeff *= parse_paren_complex(lex);
        seen = true;
      } else if (t.kind == Token::D1 || t.kind == Token::D2) {
        int power = 1;
        if (lex.peek().kind == Token::Caret) {
          lex.next();
          const Token p = lex.next();
          require(p.kind == Token::Number && p.value >= 1.0 &&
                      p.value == std::floor(p.value) && p.value <= 16.0,
                  Status::parse, "operator shorthand: integer power expected");
          power = static_cast<int>(p.value);
        }
        (t.kind == Token::D1 ? term.alpha1 : term.alpha2) += power;
        seen = true;
      } else {
        break;
      }
      t = lex.next();
    }
    require(seen, Status::parse, "operator shorthand: empty term");
    spec.terms.push_back(term);
    if (t.kind == Token::End) break;
    require(t.kind == Token::Plus || t.kind == Token::Minus, Status::parse,
            "operator shorthand: '+' or '-' expected between terms");
    pending_sign = t.kind == Token::Plus ? 1.0 : -1.0;
    t = lex.next();
  }
  return spec;
}

OperatorSpec OperatorSpec::from_json(const json& j) {
  require(j.is_object(), Status::parse, "operator: object expected");
  if (j.contains("shorthand")) {
    require(j["shorthand"].is_string(), Status::parse,
            "operator: 'shorthand' must be a string");
    return from_shorthand(j["shorthand"].get<std::string>());
  }
  require(j.contains("terms") && j["terms"].is_array(), Status::parse,
          "operator: 'terms' array or 'shorthand' string required");
  OperatorSpec spec;
  for (const auto& e : j["terms"]) {
    require(e.is_object(), Status::parse, "operator: term entries must be objects");
    OpTerm t;
    t.alpha1 = e.value("alpha1", 0);
    t.alpha2 = e.value("alpha2", 0);
    require(t.alpha1 >= 0 && t.alpha2 >= 0 && t.alpha1 <= 16 && t.alpha2 <= 16,
            Status::parse, "operator: term orders must lie in [0,16]");
    t.coeff = cplx(e.value("re", 0.0), e.value("im", 0.0));
    spec.terms.push_back(t);
  }
  require(!spec.terms.empty(), Status::parse, "operator: empty term list");
  return spec;
}

OperatorSpec OperatorSpec::first_order(cplx c) {
  OperatorSpec spec;
  spec.terms.push_back({1, 0, cplx(1.0, 0.0)});
  spec.terms.push_back({0, 1, c});
  return spec;
}

json OperatorSpec::to_json() const {
  json arr = json::array();
  for (const OpTerm& t : terms) {
    json e;
    e["alpha1"] = t.alpha1;
    e["alpha2"] = t.alpha2;
    e["re"] = t.coeff.real();
    e["im"] = t.coeff.imag();
    arr.push_back(std::move(e));
  }
  json j;
  j["terms"] = std::move(arr);
  return j;
}

Symbol::Symbol(std::function<cplx(FreqIndex)> eval, json descriptor, int cache_radius)
    : eval_(std::move(eval)), descriptor_(std::move(descriptor)),
      cache_radius_(cache_radius) {
  require(static_cast<bool>(eval_), Status::parse, "symbol needs an evaluator");
  require(cache_radius_ >= 0 && cache_radius_ <= 1024, Status::parse,
          "symbol zero-cache radius out of range");
  for (long long x1 = -cache_radius_; x1 <= cache_radius_; ++x1)
    for (long long x2 = -cache_radius_; x2 <= cache_radius_; ++x2)
      if (std::abs(eval_({x1, x2})) == 0.0) zeros_.push_back({x1, x2});
}

Symbol Symbol::adjoint() const {
  Symbol s(*this);
  s.conjugated_ = !conjugated_;
  return s;
}

Symbol diff_symbol(const OperatorSpec& op, const BoundaryParams& h) {
  h.check();
  require(!op.terms.empty(), Status::parse, "operator: empty term list");
  const double l1 = std::log(h.h1), l2 = std::log(h.h2);
  const auto terms = op.terms;
  auto eval = [terms, l1, l2](FreqIndex xi) {
    const cplx f1(l1, two_pi * static_cast<double>(xi.xi1));
    const cplx f2(l2, two_pi * static_cast<double>(xi.xi2));
    cplx acc(0.0, 0.0);
    for (const OpTerm& t : terms) acc += t.coeff * ipow(f1, t.alpha1) * ipow(f2, t.alpha2);
    return acc;
  };
  json d;
  d["kind"] = "differential";
  d["h"] = json::array({h.h1, h.h2});
  d["operator"] = op.to_json();
  return Symbol(std::move(eval), std::move(d));
}

Symbol symbol_constant_P(cplx c, const BoundaryParams& h) {
  require(c != cplx(0.0, 0.0), Status::parse,
          "first-order family requires a nonzero transport coefficient");
  h.check();
  const double a = c.real(), b = c.imag();
  const double l1 = std::log(h.h1), l2 = std::log(h.h2);
  // Split closed form; the real part carries log h1 + a log h2 as a plain sum
  // so algebraic cancellations (e.g. a = -log h1 / log h2) survive in floats.
  const double re0 = l1 + a * l2;
  const double im0 = b * l2;
  auto eval = [a, b, re0, im0](FreqIndex xi) {
    const double q1 = two_pi * static_cast<double>(xi.xi1);
    const double q2 = two_pi * static_cast<double>(xi.xi2);
    return cplx(re0 - b * q2, im0 + q1 + a * q2);
  };
  json d;
  d["kind"] = "first_order_family";
  d["c"] = json::object({{"re", a}, {"im", b}});
  d["h"] = json::array({h.h1, h.h2});
  return Symbol(std::move(eval), std::move(d));
}

Symbol make_symbol(std::function<cplx(FreqIndex)> eval, json descriptor,
                   int cache_radius) {
  return Symbol(std::move(eval), std::move(descriptor), cache_radius);
}

SpectralField apply_multiplier(const Symbol& s, const SpectralField& c) {
  c.check();
  SpectralField out = c;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] *= s(c.freq_of(i));
  return out;
}

Symbol adjoint_symbol(const Symbol& s) { return s.adjoint(); }

}  // namespace nhf
