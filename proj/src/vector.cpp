#include "radii/vector.hpp"

#include <ostream>

#include "radii/errors.hpp"

namespace radii {

namespace {

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

Vector Vector::unit(size_t dim, size_t axis) {
  Vector v(dim);
  v[axis] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_size(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same_size(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::string Vector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

Scalar dot(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  mpq_class acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Scalar(acc);
}

Vector prepend(const Scalar& head, const Vector& tail) {
  std::vector<Scalar> c;
  c.reserve(tail.size() + 1);
  c.push_back(head);
  c.insert(c.end(), tail.begin(), tail.end());
  return Vector(std::move(c));
}

Vector primitive_integer(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class scaled = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return v;
  Vector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = Scalar(mpq_class(mpz_class(v[i].numerator() * (l / v[i].denominator()) / g)));
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.str(); }

}  // namespace radii
