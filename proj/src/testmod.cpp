#include "cartk/testmod.hpp"

#include <algorithm>

namespace cartk {

namespace {

bool is_filtration_variable(const Polynomial& f) {
  Coeff c;
  Integer k;
  return f.is_filtration_monomial(&c, &k) && c == 1 && k == 1;
}

Ideal align_scaled(const CartierModuleDesc& M, const FractionalSubmodule& N,
                   const Polynomial& c, const Budgets& budgets) {
  Polynomial x_up =
      Polynomial::filtration_power(M.ring(), M.carrier().shift() - N.shift());
  return canonical_ideal(scale_by_poly(c * x_up, N.ideal()), budgets);
}

/// kappa_M^e(f^{ceil(t p^e)} * seed) summed over e up to the level budget.
FractionalSubmodule tau_sum(const CartierModuleDesc& M, const CartierAlgebraSpec& alg,
                            const FractionalSubmodule& part, const Polynomial& c,
                            const Budgets& budgets) {
  if (part.is_zero()) return FractionalSubmodule::zero(M.ring());
  const unsigned p = M.ring()->characteristic();
  long slack = M.twist().degree().get_si() + c.degree().get_si() + 1;
  long f_deg = alg.f.is_zero() ? 1 : alg.f.degree().get_si();
  const int levels = level_budget(alg.t, p, budgets, slack, f_deg);
  Ideal seed = align_scaled(M, part, c, budgets);
  FractionalSubmodule seeded(M.carrier().shift(), seed, budgets);

  FractionalSubmodule sum = FractionalSubmodule::zero(M.ring());
  bool tail_stable = false;
  for (int e = 1; e <= levels; ++e) {
    FractionalSubmodule term =
        apply_structure(M, alg, static_cast<unsigned>(e), seeded, budgets);
    FractionalSubmodule next = sum.plus(term, budgets);
    tail_stable = (e > 1 && next == sum);
    sum = next;
  }
  if (!tail_stable)
    throw stabilization_failure("test module sum still growing at the level budget");
  return sum;
}

FractionalSubmodule tau_nonnegative(const CartierModuleDesc& M, const Polynomial& f,
                                    const Rational& t, const Polynomial& c,
                                    const Budgets& budgets) {
  CartierAlgebraSpec alg(f, t);
  FractionalSubmodule part = f_pure_part(M, alg, budgets);
  return tau_sum(M, alg, part, c, budgets);
}

}  // namespace

Polynomial default_test_element(const CartierModuleDesc& M, const Polynomial& f) {
  if (f.is_zero()) throw invalid_argument("filtration element must be nonzero");
  if (M.twist().is_zero())
    throw unsupported_structure("degenerate module: zero twist has no test element");
  Integer extra = M.carrier().shift() > 0 ? Integer(1) : Integer(0);
  return f * M.twist() * Polynomial::filtration_power(M.ring(), extra);
}

FractionalSubmodule test_module(const CartierModuleDesc& M, const Polynomial& f,
                                const Rational& t, const std::optional<Polynomial>& c,
                                const Budgets& budgets) {
  require_same_ring(M.ring(), f.ring());
  if (f.is_zero()) throw invalid_argument("filtration element must be nonzero");
  Rational tt = t;
  tt.canonicalize();
  if (tt < 0) {
    if (M.provenance() != Provenance::pushforward_model)
      throw invalid_argument("negative t is defined only on pushforward models");
    if (!is_filtration_variable(f))
      throw unsupported_structure(
          "negative t requires the filtration variable as filtration element");
    FractionalSubmodule at_zero = test_module(M, f, Rational(0), c, budgets);
    return at_zero.times_filtration_power(floor_q(tt), budgets);
  }
  if (c.has_value()) {
    require_same_ring(M.ring(), c->ring());
    if (c->is_zero()) throw invalid_argument("test element must be nonzero");
    return tau_nonnegative(M, f, tt, *c, budgets);
  }
  // Validate the default test element via the power-independence of the sum:
  // a genuine test element gives the same tau as its f-multiple.
  Polynomial c0 = default_test_element(M, f);
  FractionalSubmodule tau0 = tau_nonnegative(M, f, tt, c0, budgets);
  FractionalSubmodule tau1 = tau_nonnegative(M, f, tt, c0 * f, budgets);
  if (tau0 != tau1)
    throw unsupported_structure(
        "default test element failed cross-validation; pass one explicitly");
  return tau0;
}

FractionalSubmodule test_module_left(const CartierModuleDesc& M, const Polynomial& f,
                                     const Rational& t, unsigned denom_bound,
                                     const Budgets& budgets) {
  Rational tt = t;
  tt.canonicalize();
  const bool is_model = M.provenance() == Provenance::pushforward_model;
  if (!is_model && tt <= 0)
    throw invalid_argument("left limit at t <= 0 is defined only on pushforward models");
  Rational step = Rational(1) / (Rational(denom_bound) * Rational(tt.get_den()));
  auto admissible = [&](const Rational& u) { return is_model || u >= 0; };
  while (!admissible(tt - step)) step /= 2;

  FractionalSubmodule prev = test_module(M, f, tt - step, std::nullopt, budgets);
  for (int halvings = 0; halvings < 30; ++halvings) {
    step /= 2;
    if (!admissible(tt - step)) continue;
    FractionalSubmodule cur = test_module(M, f, tt - step, std::nullopt, budgets);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw stabilization_failure(
      "left limit did not settle within the denominator bound; last candidates:\n" +
      prev.serialize());
}

namespace {

void refine_jumps(const CartierModuleDesc& M, const Polynomial& f, const Rational& lo,
                  const FractionalSubmodule& vlo, const Rational& hi,
                  const FractionalSubmodule& vhi, unsigned denom_bound, int depth,
                  std::vector<Rational>& out, const Budgets& budgets) {
  FractionalSubmodule left = test_module_left(M, f, hi, denom_bound, budgets);
  if (left == vlo) {
    out.push_back(hi);  // the unique jump in (lo, hi] sits exactly at hi
    return;
  }
  if (depth == 0) {
    // Resolution bound reached: report hi when it is itself a jump point.
    if (vhi != left) out.push_back(hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  FractionalSubmodule vmid = test_module(M, f, mid, std::nullopt, budgets);
  if (vmid != vlo) refine_jumps(M, f, lo, vlo, mid, vmid, denom_bound, depth - 1, out, budgets);
  if (vmid != vhi) refine_jumps(M, f, mid, vmid, hi, vhi, denom_bound, depth - 1, out, budgets);
}

}  // namespace

std::vector<Rational> jumping_numbers(const CartierModuleDesc& M, const Polynomial& f,
                                      const Rational& lo, const Rational& hi,
                                      unsigned denom_bound, bool hi_inclusive,
                                      const Budgets& budgets) {
  if (!(lo < hi)) throw invalid_argument("jumping numbers need lo < hi");
  const unsigned p = M.ring()->characteristic();
  Rational step = Rational(1) / (Rational(denom_bound) * Rational(p) * Rational(p));
  std::vector<Rational> grid;
  for (Rational g = lo + step; g < hi; g += step) grid.push_back(g);
  if (hi_inclusive) grid.push_back(hi);
  std::vector<Rational> jumps;

  Rational prev_t = lo;
  FractionalSubmodule prev_v = test_module(M, f, lo, std::nullopt, budgets);
  for (const Rational& g : grid) {
    FractionalSubmodule v = test_module(M, f, g, std::nullopt, budgets);
    if (v != prev_v) {
      if (!prev_v.contains(v, budgets))
        throw stabilization_failure("test module filtration is not descending");
      refine_jumps(M, f, prev_t, prev_v, g, v, denom_bound, 5, jumps, budgets);
    }
    prev_t = g;
    prev_v = v;
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return jumps;
}

GradedPiece graded_piece(const CartierModuleDesc& M, const Polynomial& f,
                         const Rational& t, unsigned denom_bound,
                         const Budgets& budgets) {
  FractionalSubmodule num = test_module_left(M, f, t, denom_bound, budgets);
  FractionalSubmodule den = test_module(M, f, t, std::nullopt, budgets);
  if (!num.contains(den, budgets))
    throw stabilization_failure("graded piece has denominator not inside numerator");
  const unsigned p = M.ring()->characteristic();
  Rational tw = t * Rational(p - 1);
  GradedPiece piece{num, den, ceil_q(tw), t, false};
  piece.annihilated_by_f = den.contains(num.times_poly(f, budgets), budgets);
  return piece;
}

bool is_f_regular(const CartierModuleDesc& M, const Polynomial& f,
                  const Budgets& budgets) {
  CartierAlgebraSpec plain(Polynomial::constant(M.ring(), 1), Rational(0));
  if (!is_f_pure(M, plain, budgets)) return false;
  return test_module(M, f, Rational(0), std::nullopt, budgets) == M.carrier();
}

CartierModuleDesc pushforward_model(const Polynomial& twist, const Budgets& budgets) {
  const RingHandle& ring = twist.ring();
  Coeff unit;
  Integer s;
  if (!twist.is_filtration_monomial(&unit, &s) || unit == 0)
    throw unsupported_structure(
        "pushforward model needs a twist of the form unit * x^s");
  FractionalSubmodule carrier =
      s == 0 ? FractionalSubmodule::fractional_full(ring, Integer(1))
             : FractionalSubmodule::full(ring);
  CartierModuleDesc model(carrier, twist, Provenance::pushforward_model, budgets);

  // Absorption certificate: each x^{-k} R must fall into the model under
  // finitely many applications of the structural map.
  CartierAlgebraSpec plain(Polynomial::constant(ring, 1), Rational(0));
  for (int k = 1; k <= 5; ++k) {
    CartierModuleDesc deep(FractionalSubmodule::fractional_full(ring, Integer(k)),
                           twist, Provenance::plain, budgets);
    bool absorbed = false;
    FractionalSubmodule image = deep.carrier();
    for (int e = 1; e <= budgets.e_max && !absorbed; ++e) {
      image = apply_structure(deep, plain, 1, image, budgets);
      absorbed = carrier.contains(image, budgets);
    }
    if (!absorbed)
      throw unsupported_structure(
          "pushforward model certificate failed at depth " + std::to_string(k));
  }
  return model;
}

}  // namespace cartk
