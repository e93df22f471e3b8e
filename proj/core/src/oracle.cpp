#include "shapecone/oracle.hpp"

#include <algorithm>
#include <future>

#include "shapecone/shapes.hpp"

namespace shapecone {

namespace {

// Dense simplex tableau for the phase-one problem
//   min Σ artificial  s.t.  A'μ + I·art = |v|,  μ, art ≥ 0,
// where A' is the generator matrix with rows flipped so that |v| ≥ 0.
class PhaseOne {
 public:
  PhaseOne(std::span<const Rational> v, std::span<const ShapeVector> gens)
      : n_(v.size()), m_(gens.size()), width_(m_ + n_ + 1),
        table_((n_ + 1) * width_), basis_(n_), sign_(n_, 1) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (v[i].sign() < 0) sign_[i] = -1;
      const Rational s(sign_[i]);
      for (std::size_t k = 0; k < m_; ++k) at(i, k) = s * gens[k][i];
      at(i, m_ + i) = 1;
      rhs(i) = s * v[i];
      basis_[i] = m_ + i;
    }
    // Objective row holds reduced costs and −(objective value).
    for (std::size_t k = 0; k < m_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) at(n_, k) -= at(i, k);
    }
    for (std::size_t i = 0; i < n_; ++i) rhs(n_) -= rhs(i);
  }

  void solve() {
    for (;;) {
      std::size_t enter = m_;
      for (std::size_t k = 0; k < m_; ++k) {
        if (at(n_, k).sign() < 0) {
          enter = k;
          break;
        }
      }
      if (enter == m_) return;

      std::size_t leave = n_;
      Rational best;
      for (std::size_t r = 0; r < n_; ++r) {
        if (at(r, enter).sign() <= 0) continue;
        const Rational ratio = rhs(r) / at(r, enter);
        if (leave == n_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == n_) {
        throw StructuralViolation("phase-one simplex reported unbounded");
      }
      pivot(leave, enter);
    }
  }

  bool feasible() const { return rhs(n_).is_zero(); }

  ShapeVector coefficients() const {
    ShapeVector mu(m_);
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] < m_) mu[basis_[r]] = rhs(r);
    }
    return mu;
  }

  // y = −π with π = c_B·B⁻¹, mapped back through the row flips. The
  // artificial columns hold B⁻¹.
  ShapeVector separating() const {
    ShapeVector y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational pi;
      for (std::size_t r = 0; r < n_; ++r) {
        if (basis_[r] >= m_) pi += at(r, m_ + i);
      }
      y[i] = Rational(-sign_[i]) * pi;
    }
    return y;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return table_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return table_[r * width_ + c];
  }
  Rational& rhs(std::size_t r) { return at(r, width_ - 1); }
  const Rational& rhs(std::size_t r) const { return at(r, width_ - 1); }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r <= n_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      const Rational f = at(r, col);
      for (std::size_t c = 0; c < width_; ++c) {
        if (!at(row, c).is_zero()) at(r, c) -= f * at(row, c);
      }
    }
    basis_[row] = col;
  }

  std::size_t n_, m_, width_;
  std::vector<Rational> table_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

}  // namespace

FeasibilityResult conic_feasibility(std::span<const Rational> v,
                                    std::span<const ShapeVector> generators) {
  for (const auto& g : generators) {
    if (g.size() != v.size()) throw DimensionMismatch(v.size(), g.size());
  }
  PhaseOne lp(v, generators);
  lp.solve();

  if (lp.feasible()) {
    FeasibilityResult out{Feasibility::feasible, lp.coefficients(), {}};
    ShapeVector sum(v.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (out.coefficients[k].sign() < 0) {
        throw StructuralViolation("feasibility witness has a negative coefficient");
      }
      sum = sum + out.coefficients[k] * generators[k];
    }
    if (!std::equal(sum.begin(), sum.end(), v.begin(), v.end())) {
      throw StructuralViolation("feasibility witness does not reconstruct v");
    }
    return out;
  }

  FeasibilityResult out{Feasibility::infeasible, {}, lp.separating()};
  for (const auto& g : generators) {
    if (dot(out.separating, g).sign() < 0) {
      throw StructuralViolation("separating functional is negative on a generator");
    }
  }
  if (dot(out.separating, v).sign() >= 0) {
    throw StructuralViolation("separating functional does not separate v");
  }
  return out;
}

std::size_t ExtremeRayReport::extreme_count() const {
  return static_cast<std::size_t>(std::count_if(
      rays.begin(), rays.end(), [](const RayVerdict& r) { return r.extreme; }));
}

ExtremeRayReport verify_extreme_rays(ConeKind kind, std::size_t n,
                                     std::size_t max_n) {
  if (n > max_n) {
    throw ScaleLimitExceeded("extreme-ray verification limited to n <= " +
                             std::to_string(max_n) + ", got " +
                             std::to_string(n));
  }
  const GeneratorSet gens = generators(kind, n);
  std::vector<std::future<FeasibilityResult>> jobs;
  jobs.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&gens, k] {
      std::vector<ShapeVector> others;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        if (t != k) others.push_back(gens.rows[t]);
      }
      return conic_feasibility(gens.rows[k], others);
    }));
  }
  ExtremeRayReport report{kind, n, {}};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    FeasibilityResult r = jobs[k].get();
    const bool extreme = !r.feasible();
    report.rays.push_back({gens.labels[k], extreme, std::move(r)});
  }
  return report;
}

Rational CoefficientStream::next() {
  const auto k = static_cast<long long>(engine_() % 65);
  return Rational(k, 64);
}

ShapeVector CoefficientStream::next(std::size_t count) {
  ShapeVector out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

ShapeVector sample_in_cone(ConeKind kind, std::size_t n, std::uint64_t seed) {
  const GeneratorSet gens = generators(kind, n);
  CoefficientStream stream(seed);
  return gens.combine(stream.next(gens.size()));
}

bool brute_force_membership(std::span<const Rational> v, ConeKind kind) {
  for (Shape s : defining_shapes(kind)) {
    if (!predicate(v, s)) return false;
  }
  return true;
}

}  // namespace shapecone
