#pragma once

// JSON and text rendering of reduction reports.

#include "formred/reduce.hpp"

#include <json.hpp>

#include <string>

namespace formred {

inline constexpr int kSchemaVersion = 1;

/// Decimal string with `digits` significant digits.
std::string decimal_string(double value, int digits);
std::string rational_decimal_string(const Rational& q, int digits);
/// sqrt(q) to `digits` significant digits, computed in 50-digit arithmetic.
std::string sqrt_decimal_string(const Rational& q, int digits);

nlohmann::json to_json(const BinaryForm& form);
nlohmann::json to_json(const UnimodularMatrix& m);
nlohmann::json to_json(const ReductionReport& report, int digits = 30);
nlohmann::json to_json(const ComparisonReport& report, int digits = 30);

/// "t = 230/61, u = (14/61)*sqrt(426)": u^2 = q written as a rational times the
/// square root of a squarefree integer when possible.
std::string describe_exact_center(const ExactCenter& center);

}  // namespace formred
