#include "ilan/scalar_function.hpp"

#include <sstream>

#include "ilan/error.hpp"

namespace ilan {
namespace {

xcplx widen(cplx z) { return {z.real(), z.imag()}; }

xcplx ipow(xcplx base, int e) {
  xcplx r{1};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_order(int order) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "negative Taylor order");
  if (order > kMaxTaylorOrder) {
    throw Error(ErrorCode::order_overflow,
                "Taylor order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(kMaxTaylorOrder));
  }
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

ScalarFunction ScalarFunction::constant(cplx value) {
  return ScalarFunction(Kind::constant, 0, value, 0.0);
}

ScalarFunction ScalarFunction::monomial(int degree) {
  if (degree < 0) throw Error(ErrorCode::invalid_argument, "monomial degree must be >= 0");
  return ScalarFunction(Kind::monomial, degree, 0.0, 0.0);
}

ScalarFunction ScalarFunction::negated_identity() {
  return ScalarFunction(Kind::negated_identity, 1, 0.0, 0.0);
}

ScalarFunction ScalarFunction::exponential(cplx rate) {
  return ScalarFunction(Kind::exponential, 0, rate, 0.0);
}

ScalarFunction ScalarFunction::sine() { return ScalarFunction(Kind::sine, 0, 0.0, 0.0); }

ScalarFunction ScalarFunction::lambda_sine() {
  return ScalarFunction(Kind::lambda_sine, 0, 0.0, 0.0);
}

ScalarFunction ScalarFunction::sqrt_shift(cplx a, cplx b) {
  return ScalarFunction(Kind::sqrt_shift, 0, a, b);
}

ScalarFunction ScalarFunction::affine(ScalarFunction inner, cplx center, cplx scale) {
  if (scale == cplx{0.0}) throw Error(ErrorCode::invalid_argument, "affine scale must be nonzero");
  return ScalarFunction(Kind::affine, 0, center, scale,
                        std::make_shared<const ScalarFunction>(std::move(inner)));
}

cplx ScalarFunction::operator()(cplx lambda) const {
  switch (kind_) {
    case Kind::constant: return a_;
    case Kind::monomial: {
      cplx r{1.0};
      for (int i = 0; i < degree_; ++i) r *= lambda;
      return r;
    }
    case Kind::negated_identity: return -lambda;
    case Kind::exponential: return std::exp(a_ * lambda);
    case Kind::sine: return std::sin(lambda);
    case Kind::lambda_sine: return lambda * std::sin(lambda);
    case Kind::sqrt_shift: return std::sqrt(a_ * lambda + b_);
    case Kind::affine: return (*inner_)(a_ + b_ * lambda);
  }
  return 0.0;
}

PowerSeries ScalarFunction::taylor_at(cplx center, cplx scale, int order) const {
  check_order(order);
  const auto L = static_cast<std::size_t>(order);
  std::vector<xcplx> t(L + 1, xcplx{0});
  const xcplx c = widen(center);
  const xcplx s = widen(scale);

  switch (kind_) {
    case Kind::constant:
      t[0] = widen(a_);
      break;

    case Kind::monomial: {
      // (c + s mu)^d = sum_j binom(d, j) c^(d-j) s^j mu^j
      const int d = degree_;
      xcplx binom{1};
      for (int j = 0; j <= std::min(d, order); ++j) {
        t[j] = binom * ipow(c, d - j) * ipow(s, j);
        binom = binom * xcplx(static_cast<long double>(d - j)) / xcplx(static_cast<long double>(j + 1));
      }
      break;
    }

    case Kind::negated_identity:
      t[0] = -c;
      if (order >= 1) t[1] = -s;
      break;

    case Kind::exponential: {
      // exp(a c) (a s)^j / j!
      const xcplx a = widen(a_);
      xcplx term = std::exp(a * c);
      for (std::size_t j = 0; j <= L; ++j) {
        t[j] = term;
        term = term * a * s / xcplx(static_cast<long double>(j + 1));
      }
      break;
    }

    case Kind::sine:
    case Kind::lambda_sine: {
      // sin(c + s mu): j-th derivative of sin at c cycles through
      // sin, cos, -sin, -cos.
      const xcplx cycle[4] = {std::sin(c), std::cos(c), -std::sin(c), -std::cos(c)};
      std::vector<xcplx> sn(L + 1);
      xcplx scale_pow{1};
      for (std::size_t j = 0; j <= L; ++j) {
        sn[j] = cycle[j % 4] * scale_pow;
        scale_pow = scale_pow * s / xcplx(static_cast<long double>(j + 1));
      }
      if (kind_ == Kind::sine) {
        t = std::move(sn);
      } else {
        std::vector<xcplx> lin(L + 1, xcplx{0});
        lin[0] = c;
        if (order >= 1) lin[1] = s;
        t = (PowerSeries(std::move(lin)) * PowerSeries(std::move(sn))).coeffs();
      }
      break;
    }

    case Kind::sqrt_shift: {
      // sqrt(a (c + s mu) + b) = sqrt(beta + alpha mu)
      const xcplx beta = widen(a_) * c + widen(b_);
      const xcplx alpha = widen(a_) * s;
      if (beta == xcplx{0}) {
        throw Error(ErrorCode::branch_point_at_origin,
                    "sqrt-shift has its branch point at the expansion centre");
      }
      std::vector<xcplx> lin(L + 1, xcplx{0});
      lin[0] = beta;
      if (order >= 1) lin[1] = alpha;
      t = PowerSeries(std::move(lin)).sqrt().coeffs();
      break;
    }

    case Kind::affine:
      // g(l0 + alpha (c + s mu)) = g((l0 + alpha c) + alpha s mu)
      return inner_->taylor_at(a_ + b_ * center, b_ * scale, order);
  }
  return PowerSeries(std::move(t));
}

std::optional<int> ScalarFunction::polynomial_degree() const {
  switch (kind_) {
    case Kind::constant: return 0;
    case Kind::monomial: return degree_;
    case Kind::negated_identity: return 1;
    case Kind::affine: return inner_->polynomial_degree();
    default: return std::nullopt;
  }
}

std::string ScalarFunction::describe() const {
  switch (kind_) {
    case Kind::constant: return fmt(a_);
    case Kind::monomial: return "l^" + std::to_string(degree_);
    case Kind::negated_identity: return "-l";
    case Kind::exponential: return "exp(" + fmt(a_) + "*l)";
    case Kind::sine: return "sin(l)";
    case Kind::lambda_sine: return "l*sin(l)";
    case Kind::sqrt_shift: return "sqrt(" + fmt(a_) + "*l+" + fmt(b_) + ")";
    case Kind::affine:
      return "[" + inner_->describe() + "](" + fmt(a_) + "+" + fmt(b_) + "*l)";
  }
  return "?";
}

}  // namespace ilan
