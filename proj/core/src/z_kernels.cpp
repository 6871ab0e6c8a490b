#include "ilan/structured_kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ilan/coeff_tables.hpp"
#include "ilan/error.hpp"
#include "ilan/hankel_table.hpp"

namespace ilan {
namespace {

cplx narrow(xcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

bool finite(xcplx z) {
  constexpr long double dmax = std::numeric_limits<double>::max();
  return std::abs(z.real()) <= dmax && std::abs(z.imag()) <= dmax;
}

int k_of(const Matrix& W) {
  if (W.cols() < 1) throw Error(ErrorCode::invalid_argument, "W must have at least one column");
  return static_cast<int>(W.cols()) - 1;
}

void require_order(const DerivativeTable& table, int k) {
  if (table.order() < 2 * k + 1) {
    throw Error(ErrorCode::order_overflow, "derivative table order " + std::to_string(table.order()) +
                                               " below required " + std::to_string(2 * k + 1));
  }
}

bool series_vanishes(const PowerSeries& s, int from, int to) {
  for (int j = from; j <= to; ++j) {
    if (s.coeff(j) != xcplx{0}) return false;
  }
  return true;
}

// Rank-one description of F for delay-type functions.
struct DepForm {
  enum class Kind { zero, linear, exponential } kind = Kind::zero;
  cplx slope{0.0};  // linear: f'(0)
  cplx coeff{1.0};  // exponential: coeff * exp(rate * l)
  cplx rate{0.0};
};

std::optional<DepForm> dep_form(const ScalarFunction& f) {
  using K = ScalarFunction::Kind;
  switch (f.kind()) {
    case K::constant: return DepForm{};
    case K::monomial:
      if (f.degree() == 0) return DepForm{};
      if (f.degree() == 1) return DepForm{DepForm::Kind::linear, 1.0, 1.0, 0.0};
      return std::nullopt;
    case K::negated_identity: return DepForm{DepForm::Kind::linear, -1.0, 1.0, 0.0};
    case K::exponential: return DepForm{DepForm::Kind::exponential, 0.0, 1.0, f.rate()};
    case K::affine: {
      auto inner = dep_form(f.inner());
      if (!inner) return std::nullopt;
      const cplx c = f.center();
      const cplx s = f.scale();
      switch (inner->kind) {
        case DepForm::Kind::zero: return inner;
        case DepForm::Kind::linear: inner->slope *= s; return inner;
        case DepForm::Kind::exponential:
          inner->coeff *= std::exp(inner->rate * c);
          inner->rate *= s;
          return inner;
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(ZStrategy s) {
  switch (s) {
    case ZStrategy::naive: return "naive";
    case ZStrategy::lowrank_fft: return "lowrank-fft";
    case ZStrategy::dep: return "dep";
    case ZStrategy::poly_lowrank: return "poly-lowrank";
  }
  return "unknown";
}

std::optional<ZStrategy> parse_z_strategy(std::string_view name) {
  if (name == "naive") return ZStrategy::naive;
  if (name == "lowrank-fft") return ZStrategy::lowrank_fft;
  if (name == "dep") return ZStrategy::dep;
  if (name == "poly-lowrank") return ZStrategy::poly_lowrank;
  return std::nullopt;
}

Matrix factorial_weighted_hankel(const PowerSeries& series, int k) {
  if (series.order() < 2 * k + 1) throw Error(ErrorCode::order_overflow, "series order below 2k+1");
  const int m = k + 1;
  Matrix E(m, m);
  for (int i = 0; i < m; ++i) {
    const long double fi = factorial_ld(i);
    for (int j = 0; j < m; ++j) {
      // (i)! (j)! t_{i+j+1} in 0-based indices
      const xcplx e = fi * series.coeff(i + j + 1) * factorial_ld(j);
      if (!finite(e)) {
        throw Error(ErrorCode::numerical_overflow,
                    "G o F entry overflows at k = " + std::to_string(k) + "; shift and scale the problem");
      }
      E(i, j) = narrow(e);
    }
  }
  return E;
}

Matrix z_naive(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table) {
  const int k = k_of(W);
  require_order(table, k);
  Matrix Z = Matrix::Zero(W.rows(), W.cols());
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const PowerSeries& s = table.series(m);
    if (series_vanishes(s, 1, 2 * k + 1)) continue;
    const Matrix E = factorial_weighted_hankel(s, k);
    Z += nep.term(m).matrix.apply(W * E);
  }
  return Z;
}

Matrix z_lowrank_fft(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table,
                     const GFactors& factors) {
  const int k = k_of(W);
  require_order(table, k);
  if (factors.k != k) throw Error(ErrorCode::invalid_argument, "GFactors built for a different k");
  Matrix Z = Matrix::Zero(W.rows(), W.cols());
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const PowerSeries& s = table.series(m);
    if (series_vanishes(s, 1, 2 * k + 1)) continue;
    const std::vector<cplx> seq = hankel_table(s, k).raw_sequence();
    Matrix Y = Matrix::Zero(W.rows(), W.cols());
    for (int j = 0; j < factors.rank(); ++j) {
      // (W diag(u_j) F) = (F (W diag(u_j))^T)^T since F is symmetric.
      const Matrix WU = W * factors.U.col(j).cast<cplx>().asDiagonal();
      const Matrix FWt = hankel_matmul(seq, WU.transpose());
      Y += FWt.transpose() * factors.V.col(j).cast<cplx>().asDiagonal();
    }
    Z += nep.term(m).matrix.apply(Y);
  }
  return Z;
}

double lowrank_error_bound(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table,
                           const GFactors& factors) {
  const int k = k_of(W);
  require_order(table, k);
  double acc = 0.0;
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const PowerSeries& s = table.series(m);
    if (series_vanishes(s, 1, 2 * k + 1)) continue;
    const Matrix F = hankel_dense(hankel_table(s, k).raw_sequence());
    acc += nep.term(m).matrix.apply(W).norm() * F.norm();
  }
  return acc * factors.tail_sum();
}

Matrix z_dep(const Matrix& W, const SpmfNep& nep) {
  const int k = k_of(W);
  const Index m1 = W.cols();
  Matrix Z = Matrix::Zero(W.rows(), m1);
  std::optional<RealMatrix> G;
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const auto form = dep_form(nep.term(m).function);
    if (!form) {
      throw Error(ErrorCode::dep_structure_violation,
                  "term " + std::to_string(m) + " (" + nep.term(m).function.describe() +
                      ") is neither affine nor exponential");
    }
    switch (form->kind) {
      case DepForm::Kind::zero:
        break;
      case DepForm::Kind::linear:
        // G o F = f'(0) e_1 e_1^T
        Z.col(0) += form->slope * nep.term(m).matrix.apply(W.col(0));
        break;
      case DepForm::Kind::exponential: {
        // G o F = coeff * rate * diag(v) G diag(v), v_j = rate^{j-1}
        if (!G) G = g_table(k + 1);
        Vector v(m1);
        v(0) = 1.0;
        for (Index j = 1; j < m1; ++j) v(j) = v(j - 1) * form->rate;
        if (!v.allFinite()) {
          throw Error(ErrorCode::numerical_overflow, "delay weight vector overflows; scale the problem");
        }
        const Matrix Y = ((W * v.asDiagonal()) * G->cast<cplx>()) * v.asDiagonal();
        Z += (form->coeff * form->rate) * nep.term(m).matrix.apply(Y);
        break;
      }
    }
  }
  return Z;
}

Matrix z_poly_lowrank(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table) {
  const int k = k_of(W);
  require_order(table, k);
  const int m1 = k + 1;
  Matrix Z = Matrix::Zero(W.rows(), m1);
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const Term& term = nep.term(m);
    const PowerSeries& s = table.series(m);
    if (term.polynomial_degree) {
      const auto fdeg = term.function.polynomial_degree();
      if (!fdeg || *fdeg > *term.polynomial_degree) {
        throw Error(ErrorCode::strategy_structure_mismatch,
                    "term " + std::to_string(m) + " is tagged polynomial but its function is not");
      }
      // Nonzeros of G o F lie on anti-diagonals s = i + j - 1 <= degree.
      Matrix Y = Matrix::Zero(W.rows(), m1);
      bool any = false;
      for (int sd = 1; sd <= std::min(*fdeg, 2 * k + 1); ++sd) {
        const xcplx t = s.coeff(sd);
        if (t == xcplx{0}) continue;
        for (int i = std::max(1, sd + 1 - m1); i <= std::min(sd, m1); ++i) {
          const int j = sd + 1 - i;
          const xcplx e = factorial_ld(i - 1) * t * factorial_ld(j - 1);
          Y.col(j - 1) += narrow(e) * W.col(i - 1);
          any = true;
        }
      }
      if (any) Z += term.matrix.apply(Y);
    } else if (term.low_rank_factor) {
      if (series_vanishes(s, 1, 2 * k + 1)) continue;
      const Matrix& U = *term.low_rank_factor;
      const Matrix E = factorial_weighted_hankel(s, k);
      Z += U * ((U.transpose() * W) * E);
    } else {
      throw Error(ErrorCode::untagged_term,
                  "term " + std::to_string(m) + " has neither a polynomial nor a low-rank tag");
    }
  }
  return Z;
}

void validate_strategy(const SpmfNep& nep, ZStrategy strategy) {
  switch (strategy) {
    case ZStrategy::naive:
    case ZStrategy::lowrank_fft:
      return;
    case ZStrategy::dep:
      for (std::size_t m = 0; m < nep.num_terms(); ++m) {
        if (!dep_form(nep.term(m).function)) {
          throw Error(ErrorCode::strategy_structure_mismatch,
                      "dep strategy: term " + std::to_string(m) + " (" + nep.term(m).function.describe() +
                          ") is not of delay type");
        }
      }
      return;
    case ZStrategy::poly_lowrank:
      for (std::size_t m = 0; m < nep.num_terms(); ++m) {
        const Term& t = nep.term(m);
        if (!t.polynomial_degree && !t.low_rank_factor) {
          throw Error(ErrorCode::strategy_structure_mismatch,
                      "poly-lowrank strategy: term " + std::to_string(m) + " is untagged");
        }
        if (t.polynomial_degree && !t.function.polynomial_degree()) {
          throw Error(ErrorCode::strategy_structure_mismatch,
                      "poly-lowrank strategy: term " + std::to_string(m) +
                          " is tagged polynomial but its function is not");
        }
      }
      return;
  }
}

}  // namespace ilan
