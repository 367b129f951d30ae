#include "radii/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "radii/errors.hpp"

namespace radii {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw InputError("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Scalar::Scalar(long long v) : q_(mpz_class(std::to_string(v), 10)) {}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  return Scalar(mpq_class(1 / q_));
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      malformed(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class digits(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) malformed(text);
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Scalar(value);
}

Scalar Scalar::from_double(double v) {
  if (!std::isfinite(v)) throw InputError("non-finite floating-point value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return Scalar(q);
}

Scalar Scalar::round_to(double v, unsigned denominator_bits) {
  if (!std::isfinite(v)) throw InputError("non-finite floating-point value");
  const double scaled = std::round(std::ldexp(v, static_cast<int>(denominator_bits)));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), scaled);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, denominator_bits);
  return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), mpz_class(q_.get_den() * 2).get_mpz_t());

  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  const bool negative = q_ < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace radii
