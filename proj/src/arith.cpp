#include "picardlab/arith.hpp"

#include <limits>
#include <stdexcept>

namespace picardlab {

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_perfect_square(const Integer& value) {
  if (value < 0) return false;
  return mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs_value(value) * scale;
  // Round half up on the magnitude.
  Integer rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string out = (value < 0 && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  return value.get_si();
}

}  // namespace picardlab
