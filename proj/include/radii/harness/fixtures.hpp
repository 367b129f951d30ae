#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "radii/polytope.hpp"

namespace radii::harness {

using Value = std::variant<Scalar, bool>;
std::string render(const Value& v);

/// Where an expected value comes from: stated in the literature, derived
/// from stated facts, or immediate from the definitions.
enum class Origin { stated, derived, trivial };
const char* to_string(Origin o);

struct Check {
  std::string quantity;
  Value expected;
  Origin origin;
  std::function<Value()> compute;
};

struct Fixture {
  std::string name;
  VPolytope body;
  Gauge gauge;
  std::vector<Check> checks;
};

const std::vector<std::string>& fixture_names();

/// InputError for an unknown name.
Fixture make_fixture(std::string_view name);

/// S² = conv{0, e1, e2} in the plane z = 0 of R³.
VPolytope flat_triangle();
/// S² × [−1/2, 1/2].
VPolytope triangle_prism();

}  // namespace radii::harness
