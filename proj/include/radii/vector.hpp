#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "radii/scalar.hpp"

namespace radii {

/// Point or direction in Q^n. Length is the ambient dimension; equality and
/// ordering are exact and lexicographic.
class Vector {
 public:
  Vector() = default;
  explicit Vector(size_t dim) : c_(dim) {}
  Vector(std::initializer_list<Scalar> coords) : c_(coords) {}
  explicit Vector(std::vector<Scalar> coords) : c_(std::move(coords)) {}

  static Vector unit(size_t dim, size_t axis);

  size_t size() const { return c_.size(); }
  const Scalar& operator[](size_t i) const { return c_[i]; }
  Scalar& operator[](size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Scalar& s) { return a *= s; }
  friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b) = default;
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

  std::string str() const;

 private:
  std::vector<Scalar> c_;
};

Scalar dot(const Vector& a, const Vector& b);

/// Vector with one extra leading coordinate.
Vector prepend(const Scalar& head, const Vector& tail);

/// Smallest positive multiple with coprime integer entries; zero stays zero.
Vector primitive_integer(const Vector& v);

std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace radii
