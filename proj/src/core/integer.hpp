#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "core/error.hpp"

namespace mobiuslab {

using Integer = mpz_class;
using Rational = mpq_class;
using Json = nlohmann::ordered_json;

/// JSON number when the value fits in a signed 64-bit integer, decimal string
/// otherwise. Readers accept both.
inline Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

/// Integers as JSON numbers; non-integral rationals as "p/q" strings.
inline Json to_json(const Rational& v) {
  if (v.get_den() == 1) return to_json(Integer(v.get_num()));
  return Json(v.get_str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
    }
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline int sign(const Integer& v) { return sgn(v); }

}  // namespace mobiuslab
