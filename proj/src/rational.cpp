#include "zigzag/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace zigzag {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(text)) throw std::invalid_argument("bad weight literal: " + text);
    return Rational(mpz_class(text));
  }
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw std::invalid_argument("bad weight literal: " + text);
  if (!whole.empty() && !all_digits(whole)) throw std::invalid_argument("bad weight literal: " + text);
  if (!frac.empty() && !all_digits(frac)) throw std::invalid_argument("bad weight literal: " + text);
  mpz_class num = whole.empty() ? mpz_class(0) : mpz_class(whole);
  mpz_class den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_fraction(const std::string& text, std::string::size_type slash) {
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad weight literal: " + text);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_weight(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty weight literal");
  auto slash = text.find('/');
  Rational q = slash == std::string::npos ? parse_decimal(text) : parse_fraction(text, slash);
  if (q <= 0 || q > 1) throw std::invalid_argument("weight outside (0,1]: " + text);
  return q;
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

std::string to_decimal_string(const Rational& q, int significant_digits) {
  if (q == 0) return "0";
  if (significant_digits < 1) significant_digits = 1;
  mpf_t f;
  // 4 bits per requested digit plus slack keeps the rounding honest.
  mpf_init2(f, static_cast<mp_bitcnt_t>(significant_digits * 4 + 64));
  mpf_set_q(f, q.get_mpq_t());
  mp_exp_t exp = 0;
  char buf[128];
  mpf_get_str(buf, &exp, 10, static_cast<size_t>(significant_digits), f);
  mpf_clear(f);
  std::string digits(buf);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (static_cast<int>(digits.size()) < significant_digits) digits.push_back('0');
  std::string mantissa = digits.substr(0, 1);
  if (digits.size() > 1) mantissa += "." + digits.substr(1);
  char expbuf[32];
  std::snprintf(expbuf, sizeof(expbuf), "e%+03ld", static_cast<long>(exp - 1));
  return sign + mantissa + expbuf;
}

}  // namespace zigzag
