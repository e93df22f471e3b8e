#include "shapecone/shapes.hpp"

#include <algorithm>

namespace shapecone {

namespace {

constexpr std::array<std::string_view, 7> kShapeNames = {
    "positive", "increasing", "decreasing", "convex",
    "concave",  "unimodal",   "log_concave",
};

PredicateResult fail_at(std::size_t index) { return {false, index}; }

// First i (1-based) with values[i-1] < lower, else success.
PredicateResult first_below(std::span<const Rational> values,
                            const Rational& lower, std::size_t offset) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < lower) return fail_at(i + offset);
  }
  return {};
}

PredicateResult first_above(std::span<const Rational> values,
                            const Rational& upper, std::size_t offset) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > upper) return fail_at(i + offset);
  }
  return {};
}

PredicateResult unimodal(std::span<const Rational> v, const Rational& eps) {
  const ShapeVector d = forward_differences(v);
  std::size_t i = 0;
  while (i < d.size() && d[i] >= -eps) ++i;
  for (; i < d.size(); ++i) {
    if (d[i] > eps) return fail_at(i + 1);
  }
  return {};
}

PredicateResult log_concave(std::span<const Rational> v, const Rational& eps) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() <= 0) {
      throw NonPositiveEntry("log-concavity needs positive entries; entry " +
                             std::to_string(i + 1) + " is " + v[i].str());
    }
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] * v[i] - v[i - 1] * v[i + 1] < -eps) return fail_at(i + 1);
  }
  return {};
}

}  // namespace

std::string_view to_string(Shape s) {
  return kShapeNames[static_cast<std::size_t>(s)];
}

std::optional<Shape> parse_shape(std::string_view name) {
  for (std::size_t i = 0; i < kShapeNames.size(); ++i) {
    if (kShapeNames[i] == name) return static_cast<Shape>(i);
  }
  return std::nullopt;
}

ShapeVector forward_differences(std::span<const Rational> v) {
  ShapeVector d;
  if (v.size() < 2) return d;
  d.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
  return d;
}

ShapeVector second_differences(std::span<const Rational> v) {
  ShapeVector d;
  if (v.size() < 3) return d;
  d.reserve(v.size() - 2);
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    d.push_back(v[i + 2] - Rational(2) * v[i + 1] + v[i]);
  }
  return d;
}

PredicateResult check_shape(std::span<const Rational> v, Shape shape,
                            const Rational& eps) {
  if (eps.sign() < 0) throw Error("tolerance must be nonnegative");
  const Rational lo = -eps;
  switch (shape) {
    case Shape::positive:
      return first_below(v, lo, 1);
    case Shape::increasing:
      return first_below(forward_differences(v), lo, 1);
    case Shape::decreasing:
      return first_above(forward_differences(v), eps, 1);
    case Shape::convex:
      return first_below(second_differences(v), lo, 2);
    case Shape::concave:
      return first_above(second_differences(v), eps, 2);
    case Shape::unimodal:
      return unimodal(v, eps);
    case Shape::log_concave:
      return log_concave(v, eps);
  }
  return {};
}

const PredicateResult* ShapeReport::get(Shape s) const {
  switch (s) {
    case Shape::positive: return &positive;
    case Shape::increasing: return &increasing;
    case Shape::decreasing: return &decreasing;
    case Shape::convex: return &convex;
    case Shape::concave: return &concave;
    case Shape::unimodal: return &unimodal;
    case Shape::log_concave: return log_concave ? &*log_concave : nullptr;
  }
  return nullptr;
}

ShapeReport classify(std::span<const Rational> v, const Rational& eps) {
  ShapeReport r;
  r.positive = check_shape(v, Shape::positive, eps);
  r.increasing = check_shape(v, Shape::increasing, eps);
  r.decreasing = check_shape(v, Shape::decreasing, eps);
  r.convex = check_shape(v, Shape::convex, eps);
  r.concave = check_shape(v, Shape::concave, eps);
  r.unimodal = check_shape(v, Shape::unimodal, eps);
  const bool all_positive = std::all_of(
      v.begin(), v.end(), [](const Rational& x) { return x.sign() > 0; });
  if (all_positive) r.log_concave = check_shape(v, Shape::log_concave, eps);
  return r;
}

}  // namespace shapecone
