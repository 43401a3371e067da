#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gnm/poly_matrix.hpp"
#include "gnm/rational_function.hpp"
#include "gnm/schur.hpp"

namespace gnm {

using Json = nlohmann::ordered_json;

/// Rejected input with the JSON pointer of the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& what)
      : std::runtime_error(what), pointer_(std::move(pointer)) {}
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& pointer);

/// Accepts an ascending coefficient array, or a string holding either a
/// comma-separated ascending list ("-1,0,1") or an expression in λ
/// ("λ²−1", "lambda^2 - 1", "(2/3)x^3+x"; λ, lambda, l, x and z all name
/// the variable).
Polynomial polynomial_from_json(const Json& j, const std::string& pointer);

/// "1, 0, -1/2" → (1, 0, −1/2); throws MathError(ParseError).
std::vector<Rational> parse_rational_list(std::string_view text);

/// Parses an expression in the variable; throws MathError(ParseError).
Polynomial parse_polynomial(std::string_view text);

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const PolyMatrix2x2& w);
Json to_json(const SchurChain& chain);

}  // namespace gnm
