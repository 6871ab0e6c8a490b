#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ilan/power_series.hpp"
#include "ilan/types.hpp"

namespace ilan {

/// Closed catalog of scalar analytic functions with exact Taylor expansions.
///
/// Every kind can produce its Taylor coefficients at an arbitrary centre under
/// an affine change of variable, which is what makes affine composition (and
/// therefore shift-and-scale) exact.
class ScalarFunction {
 public:
  enum class Kind {
    constant,          // f(l) = value
    monomial,          // f(l) = l^d
    negated_identity,  // f(l) = -l
    exponential,       // f(l) = exp(a l)
    sine,              // f(l) = sin(l)
    lambda_sine,       // f(l) = l sin(l)
    sqrt_shift,        // f(l) = sqrt(a l + b), principal branch
    affine,            // f(l) = g(l0 + alpha l)
  };

  static ScalarFunction constant(cplx value = 1.0);
  static ScalarFunction monomial(int degree);
  static ScalarFunction negated_identity();
  static ScalarFunction exponential(cplx rate);
  static ScalarFunction sine();
  static ScalarFunction lambda_sine();
  static ScalarFunction sqrt_shift(cplx a, cplx b);
  static ScalarFunction affine(ScalarFunction inner, cplx center, cplx scale);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  cplx value() const { return a_; }  // constant
  cplx rate() const { return a_; }   // exponential
  cplx sqrt_a() const { return a_; }
  cplx sqrt_b() const { return b_; }
  cplx center() const { return a_; }  // affine
  cplx scale() const { return b_; }   // affine
  const ScalarFunction& inner() const { return *inner_; }

  cplx operator()(cplx lambda) const;

  /// Taylor coefficients of f at the origin up to `order`.
  PowerSeries taylor(int order) const { return taylor_at(0.0, 1.0, order); }

  /// Taylor coefficients of mu -> f(center + scale * mu) at mu = 0.
  PowerSeries taylor_at(cplx center, cplx scale, int order) const;

  /// Degree when f is a polynomial (constant, monomial, -l, affine of these).
  std::optional<int> polynomial_degree() const;

  std::string describe() const;

 private:
  ScalarFunction(Kind kind, int degree, cplx a, cplx b,
                 std::shared_ptr<const ScalarFunction> inner = nullptr)
      : kind_(kind), degree_(degree), a_(a), b_(b), inner_(std::move(inner)) {}

  Kind kind_;
  int degree_ = 0;
  cplx a_{0.0};
  cplx b_{0.0};
  std::shared_ptr<const ScalarFunction> inner_;
};

}  // namespace ilan
