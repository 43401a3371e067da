#include "gnm/json_io.hpp"

#include <cctype>

#include "gnm/errors.hpp"

namespace gnm {

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) throw InputError(pointer, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const MathError& e) {
    throw InputError(pointer, e.what());
  }
}

namespace {

// Rewrites unicode spellings into ASCII: λ → x, superscript digits → ^d,
// U+2212 → '-'. Word variable names collapse to x.
std::string canonical_ascii(std::string_view text) {
  static const std::pair<std::string_view, std::string_view> table[] = {
      {"λ", "x"}, {"−", "-"}, {"⁰", "0"}, {"¹", "1"}, {"²", "2"}, {"³", "3"}, {"⁴", "4"},
      {"⁵", "5"}, {"⁶", "6"}, {"⁷", "7"}, {"⁸", "8"}, {"⁹", "9"}, {"·", "*"}};
  std::string out;
  bool in_super = false;
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    for (const auto& [from, to] : table) {
      if (text.substr(i, from.size()) == from) {
        const bool super = from.size() > 1 && std::isdigit(static_cast<unsigned char>(to[0])) != 0;
        if (super && !in_super) out += '^';
        in_super = super;
        out += to;
        i += from.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    in_super = false;
    if (text.substr(i, 6) == "lambda") {
      out += 'x';
      i += 6;
      continue;
    }
    const char c = text[i++];
    if (c == ' ' || c == '\t') continue;
    out += (c == 'l' || c == 'z') ? 'x' : c;
  }
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string src) : s_(std::move(src)) {}

  Polynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    Polynomial acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      acc += term() * Rational(sgn);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw MathError(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Polynomial term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      ++pos_;
      int sgn = 1;
      if (peek() == '-' || peek() == '+') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      coeff = number() * sgn;
      if (peek() != ')') fail("expected )");
      ++pos_;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      coeff = number();
      have_coeff = true;
    }
    if (have_coeff && peek() == '*') ++pos_;
    if (peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or the variable");
      return Polynomial::constant(coeff);
    }
    ++pos_;
    std::size_t power = 1;
    if (peek() == '^') {
      ++pos_;
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
      if (start == pos_) fail("expected an exponent");
      power = std::stoul(s_.substr(start, pos_ - start));
    }
    return Polynomial::monomial(coeff, power);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::erase(item, ' ');
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  return ExprParser(canonical_ascii(text)).parse();
}

Polynomial polynomial_from_json(const Json& j, const std::string& pointer) {
  if (j.is_array()) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
      c.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
    }
    return Polynomial(std::move(c));
  }
  if (j.is_number_integer()) return Polynomial::constant(rational_from_json(j, pointer));
  if (!j.is_string()) throw InputError(pointer, "expected a polynomial string or coefficient array");
  const auto text = j.get<std::string>();
  try {
    if (text.find(',') != std::string::npos) return Polynomial(parse_rational_list(text));
    return parse_polynomial(text);
  } catch (const MathError& e) {
    throw InputError(pointer, e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Polynomial& p) {
  Json o;
  o["display"] = to_display(p);
  o["coeffs"] = to_json(p.coefficients());
  return o;
}

Json to_json(const RationalFunction& f) {
  Json o;
  o["num"] = to_display(f.num());
  o["den"] = to_display(f.den());
  o["num_coeffs"] = to_json(f.num().coefficients());
  o["den_coeffs"] = to_json(f.den().coefficients());
  return o;
}

Json to_json(const PolyMatrix2x2& w) {
  Json o;
  o["w11"] = to_json(w.w11);
  o["w12"] = to_json(w.w12);
  o["w21"] = to_json(w.w21);
  o["w22"] = to_json(w.w22);
  o["scale"] = to_string(w.scale);
  return o;
}

Json to_json(const SchurChain& chain) {
  Json steps = Json::array();
  for (const auto& st : chain.steps) {
    Json o;
    o["gap"] = st.gap;
    o["p"] = to_json(st.p);
    o["eps"] = st.eps;
    o["a_sq"] = to_string(st.a_sq);
    o["induced"] = to_json(st.induced);
    steps.push_back(std::move(o));
  }
  Json o;
  o["steps"] = std::move(steps);
  o["residual"] = to_json(chain.residual);
  o["normal_indices"] = chain.normal_indices;
  o["kappa_offsets"] = chain.kappa_offsets;
  o["scale"] = to_string(chain.scale);
  return o;
}

}  // namespace gnm
