#include "horadam/numeric.hpp"

#include <cctype>
#include <cstdlib>

#include "horadam/error.hpp"

namespace horadam {

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void malformed(const std::string& text) {
  throw Error(ErrorCode::InvalidArgument, "malformed number '" + text + "'");
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) malformed(text);

  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) malformed(text);
    return num / den;
  }

  std::string body = text;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    std::string exp_text = body.substr(e + 1);
    body.erase(e);
    std::string exp_digits = exp_text;
    if (!exp_digits.empty() && (exp_digits[0] == '+' || exp_digits[0] == '-')) exp_digits.erase(0, 1);
    if (!all_digits(exp_digits) || exp_digits.size() > 6) malformed(text);
    exponent = std::strtol(exp_text.c_str(), nullptr, 10);
  }

  std::string int_part = body;
  std::string frac_part;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) malformed(text);
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    malformed(text);
  }

  Integer digits(int_part + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());

  Rational value(digits);
  if (exponent > 0) {
    value *= Rational(pow10(static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    value /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const bool negative = value < 0;
  Rational scaled = abs(value) * Rational(pow10(static_cast<unsigned long>(digits)));
  // round half away from zero
  Integer rounded = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && rounded != 0) s.insert(0, "-");
  return s;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace horadam
