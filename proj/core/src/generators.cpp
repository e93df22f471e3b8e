#include "shapecone/generators.hpp"

#include <algorithm>

namespace shapecone {

namespace {

constexpr std::array<std::string_view, 9> kConeNames = {
    "positive",          "positive_increasing", "positive_decreasing",
    "positive_concave",  "positive_convex",     "increasing_convex",
    "decreasing_convex", "increasing_concave",  "decreasing_concave",
};

void require_n(std::size_t n) {
  if (n == 0) throw IndexOutOfRange("dimension must be at least 1");
}

void require_index(std::size_t i, std::size_t lo, std::size_t hi,
                   std::string_view what) {
  if (i < lo || i > hi) {
    throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(i) +
                          " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  }
}

Rational ratio(std::size_t p, std::size_t q) {
  return Rational(static_cast<long long>(p), static_cast<long long>(q));
}

std::string label(std::string_view name, std::size_t i) {
  return std::string(name) + "(" + std::to_string(i) + ")";
}

}  // namespace

std::string_view to_string(ConeKind kind) {
  return kConeNames[static_cast<std::size_t>(kind)];
}

std::optional<ConeKind> parse_cone_kind(std::string_view name) {
  for (std::size_t i = 0; i < kConeNames.size(); ++i) {
    if (kConeNames[i] == name) return static_cast<ConeKind>(i);
  }
  return std::nullopt;
}

std::vector<Shape> defining_shapes(ConeKind kind) {
  using S = Shape;
  switch (kind) {
    case ConeKind::positive: return {S::positive};
    case ConeKind::positive_increasing: return {S::positive, S::increasing};
    case ConeKind::positive_decreasing: return {S::positive, S::decreasing};
    case ConeKind::positive_concave: return {S::positive, S::concave};
    case ConeKind::positive_convex: return {S::positive, S::convex};
    case ConeKind::increasing_convex:
      return {S::positive, S::increasing, S::convex};
    case ConeKind::decreasing_convex:
      return {S::positive, S::decreasing, S::convex};
    case ConeKind::increasing_concave:
      return {S::positive, S::increasing, S::concave};
    case ConeKind::decreasing_concave:
      return {S::positive, S::decreasing, S::concave};
  }
  return {};
}

ShapeVector standard_concave(std::size_t n, std::size_t i) {
  require_n(n);
  require_index(i, 1, n, "standard concave vector");
  ShapeVector c(n);
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) {
      c[j - 1] = 1;
    } else if (j < i) {
      c[j - 1] = ratio(j - 1, i - 1);
    } else {
      c[j - 1] = ratio(n - j, n - i);
    }
  }
  return c;
}

ShapeVector standard_increasing_convex(std::size_t n, std::size_t i) {
  if (n < 2) throw IndexOutOfRange("standard convex vectors need n >= 2");
  require_index(i, 1, n - 1, "standard increasing convex vector");
  ShapeVector a(n);
  for (std::size_t j = i + 1; j <= n; ++j) a[j - 1] = ratio(j - i, n - i);
  return a;
}

ShapeVector standard_decreasing_convex(std::size_t n, std::size_t i) {
  return reversed(standard_increasing_convex(n, i));
}

ShapeVector step_vector(std::size_t n, std::size_t i) {
  require_n(n);
  require_index(i, 1, n, "step vector");
  ShapeVector s(n);
  for (std::size_t j = i; j <= n; ++j) s[j - 1] = 1;
  return s;
}

ShapeVector standard_increasing_concave(std::size_t n, std::size_t i) {
  require_n(n);
  require_index(i, 1, n, "standard increasing concave vector");
  if (i == 1) return constant_vector(n, 1);
  ShapeVector h(n);
  for (std::size_t j = 1; j <= n; ++j) h[j - 1] = ratio(std::min(j, i) - 1, i - 1);
  return h;
}

ShapeVector standard_decreasing_concave(std::size_t n, std::size_t i) {
  require_n(n);
  require_index(i, 1, n, "standard decreasing concave vector");
  return reversed(standard_increasing_concave(n, n - i + 1));
}

ShapeVector GeneratorSet::combine(std::span<const Rational> coefficients) const {
  if (coefficients.size() != rows.size()) {
    throw DimensionMismatch(rows.size(), coefficients.size());
  }
  ShapeVector out(n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[k][j].is_zero()) out[j] += coefficients[k] * rows[k][j];
    }
  }
  return out;
}

GeneratorSet generators(ConeKind kind, std::size_t n) {
  require_n(n);
  GeneratorSet g{kind, n, {}, {}};
  auto add = [&g](ShapeVector row, std::string name) {
    g.rows.push_back(std::move(row));
    g.labels.push_back(std::move(name));
  };
  if (n == 1) {
    add({Rational(1)}, "1");
    return g;
  }
  switch (kind) {
    case ConeKind::positive:
      for (std::size_t i = 1; i <= n; ++i) add(unit_vector(n, i - 1), label("e", i));
      break;
    case ConeKind::positive_increasing:
      for (std::size_t i = 1; i <= n; ++i) add(step_vector(n, i), label("s", i));
      break;
    case ConeKind::positive_decreasing:
      for (std::size_t i = 1; i <= n; ++i) {
        add(reversed(step_vector(n, n - i + 1)), label("r", i));
      }
      break;
    case ConeKind::positive_concave:
      for (std::size_t i = 1; i <= n; ++i) add(standard_concave(n, i), label("c", i));
      break;
    case ConeKind::positive_convex:
      for (std::size_t i = 1; i < n; ++i) {
        add(standard_increasing_convex(n, i), label("a", i));
      }
      for (std::size_t i = 1; i < n; ++i) {
        add(standard_decreasing_convex(n, i), label("b", i));
      }
      break;
    case ConeKind::increasing_convex:
      add(constant_vector(n, 1), "1");
      for (std::size_t i = 1; i < n; ++i) {
        add(standard_increasing_convex(n, i), label("a", i));
      }
      break;
    case ConeKind::decreasing_convex:
      add(constant_vector(n, 1), "1");
      for (std::size_t i = 1; i < n; ++i) {
        add(standard_decreasing_convex(n, i), label("b", i));
      }
      break;
    case ConeKind::increasing_concave:
      for (std::size_t i = 1; i <= n; ++i) {
        add(standard_increasing_concave(n, i), label("h", i));
      }
      break;
    case ConeKind::decreasing_concave:
      for (std::size_t i = 1; i <= n; ++i) {
        add(standard_decreasing_concave(n, i), label("d", i));
      }
      break;
  }
  return g;
}

}  // namespace shapecone
