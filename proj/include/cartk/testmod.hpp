#ifndef CARTK_TESTMOD_HPP
#define CARTK_TESTMOD_HPP

#include <optional>
#include <vector>

#include "cartk/cartier.hpp"

namespace cartk {

/// Exact rational filtration parameter.
struct FiltrationParam {
  Rational t;
  explicit FiltrationParam(Rational value) : t(std::move(value)) { t.canonicalize(); }
};

/// tau(M, f^{t-eps}) / tau(M, f^t) together with its induced twist data.
struct GradedPiece {
  FractionalSubmodule numerator;    // left value tau(M, f^{t-eps})
  FractionalSubmodule denominator;  // tau(M, f^t)
  Integer twist_exponent;           // ceil(t (p-1))
  Rational jump;
  bool annihilated_by_f;  // f * numerator <= denominator (an R/(f)-object)

  bool is_zero_piece() const { return numerator == denominator; }
};

/// c = f * g * x^{min(n,1)}: the filtration element times the twist, times x
/// when the carrier is fractional. Throws on a degenerate (zero) twist.
Polynomial default_test_element(const CartierModuleDesc& M, const Polynomial& f);

/// tau(M, f^t). For t >= 0 this is the stabilized sum
///   sum_{e>=1} kappa_M^e(f^{ceil(t p^e)} c N)  with N the F-pure part for
/// the twisted algebra; the default c is cross-validated against c*f.
/// For t < 0 (pushforward models along x only) it is f^{floor(t)} tau(M, f^0).
FractionalSubmodule test_module(const CartierModuleDesc& M, const Polynomial& f,
                                const Rational& t,
                                const std::optional<Polynomial>& c = std::nullopt,
                                const Budgets& budgets = Budgets{});

/// Left limit tau(M, f^{t-eps}): evaluates at shrinking steps below t until
/// two consecutive values agree.
FractionalSubmodule test_module_left(const CartierModuleDesc& M, const Polynomial& f,
                                     const Rational& t, unsigned denom_bound = 30,
                                     const Budgets& budgets = Budgets{});

/// Jumping numbers in (lo, hi] (or (lo, hi) when hi_inclusive is false),
/// detected on the grid of step 1/(denom_bound * p^2) and refined near
/// changes; complete only for jumps with denominators within that bound.
std::vector<Rational> jumping_numbers(const CartierModuleDesc& M, const Polynomial& f,
                                      const Rational& lo, const Rational& hi,
                                      unsigned denom_bound = 5,
                                      bool hi_inclusive = true,
                                      const Budgets& budgets = Budgets{});

GradedPiece graded_piece(const CartierModuleDesc& M, const Polynomial& f,
                         const Rational& t, unsigned denom_bound = 30,
                         const Budgets& budgets = Budgets{});

/// F-pure with full test module at t = 0.
bool is_f_regular(const CartierModuleDesc& M, const Polynomial& f,
                  const Budgets& budgets = Budgets{});

/// Canonical coherent model of the pushforward along D(x) of the rank-1
/// structure with twist c*x^s: carrier x^{-1}R for s = 0, carrier R for
/// s >= 1. Validates the local absorption certificate
/// kappa_M^{e(k)}(x^{-k} R) <= model for k <= 5.
CartierModuleDesc pushforward_model(const Polynomial& twist,
                                    const Budgets& budgets = Budgets{});

}  // namespace cartk

#endif
