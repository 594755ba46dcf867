#ifndef CARTK_CARTIER_HPP
#define CARTK_CARTIER_HPP

#include <string>

#include "cartk/frobenius.hpp"

namespace cartk {

/// x^{-shift} * I inside R_x, where x is the ring's filtration variable.
/// Stored canonically: basis reduced and the shift minimal among equal
/// representations (common x-factors stripped), so equality is structural.
class FractionalSubmodule {
 public:
  FractionalSubmodule(Integer shift, Ideal ideal, const Budgets& budgets = Budgets{});

  static FractionalSubmodule zero(const RingHandle& ring);
  static FractionalSubmodule full(const RingHandle& ring);  // R itself
  /// x^{-shift} * R.
  static FractionalSubmodule fractional_full(const RingHandle& ring,
                                             const Integer& shift);

  const RingHandle& ring() const { return ideal_.ring(); }
  const Integer& shift() const { return shift_; }
  const Ideal& ideal() const { return ideal_; }
  const ReducedGB& basis() const { return basis_; }
  bool is_zero() const { return ideal_.is_zero(); }

  bool operator==(const FractionalSubmodule& other) const;
  bool operator!=(const FractionalSubmodule& other) const { return !(*this == other); }
  bool contains(const FractionalSubmodule& other, const Budgets& budgets = Budgets{}) const;
  /// Membership of x^{-elem_shift} * f.
  bool contains_element(const Polynomial& f, const Integer& elem_shift = Integer(0),
                        const Budgets& budgets = Budgets{}) const;

  FractionalSubmodule plus(const FractionalSubmodule& other,
                           const Budgets& budgets = Budgets{}) const;
  /// Multiplication by x^k, k of either sign.
  FractionalSubmodule times_filtration_power(const Integer& k,
                                             const Budgets& budgets = Budgets{}) const;
  FractionalSubmodule times_poly(const Polynomial& g,
                                 const Budgets& budgets = Budgets{}) const;

  std::string serialize() const;  // "shift <n>" + one basis element per line

 private:
  Integer shift_;
  Ideal ideal_;
  ReducedGB basis_;
};

enum class Provenance { plain, pushforward_model, kummer_pullback };

/// Rank-1 twisted Cartier module: the structural map acts on the fractional
/// carrier x^{-n} I by
///   kappa_M(x^{-n} a) = x^{-n} kappa(g x^{n(p-1)} a),
/// so the e-fold action multiplies by g^{(p^e-1)/(p-1)} x^{n(p^e-1)} before
/// kappa^e.
class CartierModuleDesc {
 public:
  CartierModuleDesc(FractionalSubmodule carrier, Polynomial twist,
                    Provenance provenance = Provenance::plain,
                    const Budgets& budgets = Budgets{});

  const RingHandle& ring() const { return carrier_.ring(); }
  const FractionalSubmodule& carrier() const { return carrier_; }
  const Polynomial& twist() const { return twist_; }
  Provenance provenance() const { return provenance_; }

 private:
  FractionalSubmodule carrier_;
  Polynomial twist_;
  Provenance provenance_;
};

/// The algebra generated in degree e by kappa_M^e f^{ceil(t p^e)}.
struct CartierAlgebraSpec {
  Polynomial f;
  Rational t;

  CartierAlgebraSpec(Polynomial f_, Rational t_) : f(std::move(f_)), t(std::move(t_)) {
    t.canonicalize();
    if (t < 0) throw invalid_argument("Cartier algebra parameter t must be >= 0");
  }
};

/// kappa_M^e(f^{ceil(t p^e)} N). The f-power is consumed one base-p chunk per
/// level (kappa^e(f^{c+pq} W) = kappa^{e-1}(f^q kappa(f^c W))), so no
/// intermediate exponent exceeds p*(ceil(t)+1) even for huge ceil(t p^e).
FractionalSubmodule apply_structure(const CartierModuleDesc& M,
                                    const CartierAlgebraSpec& alg, unsigned e,
                                    const FractionalSubmodule& N,
                                    const Budgets& budgets = Budgets{});

/// C_+ N = sum_{e>=1} kappa_M^e(f^{ceil(t p^e)} N), summed to a
/// denominator-aware level bound and checked for tail stabilization.
FractionalSubmodule cartier_plus(const CartierModuleDesc& M,
                                 const CartierAlgebraSpec& alg,
                                 const FractionalSubmodule& N,
                                 const Budgets& budgets = Budgets{});

/// Stable value of the descending chain N -> C_+ N starting from the full
/// carrier; the result satisfies C_+ (result) = result.
FractionalSubmodule f_pure_part(const CartierModuleDesc& M,
                                const CartierAlgebraSpec& alg,
                                const Budgets& budgets = Budgets{});

bool is_f_pure(const CartierModuleDesc& M, const CartierAlgebraSpec& alg,
               const Budgets& budgets = Budgets{});

/// True iff the chain (C_+)^i carrier reaches (0).
bool is_nilpotent(const CartierModuleDesc& M, const CartierAlgebraSpec& alg,
                  const Budgets& budgets = Budgets{});

/// Number of levels needed before the rounding slack of the level sums
/// decays below the jump gaps: smallest L with
///   p^{L - v_p(den t)} >= 4 * d' * (p-1) * f_deg * (ceil(t)+2) * (slack+1),
/// where d' is the p-free part of den(t), f_deg bounds the filtration
/// element's degree and slack bounds the seed degree (twist, test element).
/// Floored at max(6, budgets.e_max), capped at budgets.level_hard_cap.
int level_budget(const Rational& t, unsigned p, const Budgets& budgets,
                 long slack_deg = 2, long f_deg = 1);

}  // namespace cartk

#endif
