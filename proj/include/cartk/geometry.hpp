#ifndef CARTK_GEOMETRY_HPP
#define CARTK_GEOMETRY_HPP

#include "cartk/testmod.hpp"

namespace cartk {

/// Degree-n covering t^n = x along the filtration variable: the covering
/// ring replaces x by t (same slot), gcd(n, p) = 1 and n | p-1 so that a
/// primitive n-th root of unity exists in F_p.
class KummerCovering {
 public:
  KummerCovering(RingHandle base, unsigned degree,
                 const std::string& cover_variable = "t");

  const RingHandle& base() const { return base_; }
  const RingHandle& cover() const { return cover_; }
  unsigned degree() const { return n_; }
  Coeff zeta() const { return zeta_; }

  /// Substitution x -> t^n on polynomials over the base ring.
  Polynomial lift(const Polynomial& f) const;
  /// Inverse substitution on polynomials all of whose t-exponents are
  /// divisible by n.
  Polynomial descend(const Polynomial& f) const;
  /// The Galois action on carrier elements: t^d -> zeta^{d+1} t^d (the
  /// generator's action under the delta_{n-1} identification).
  Polynomial galois_action(const Polynomial& f, unsigned power = 1) const;

 private:
  RingHandle base_;
  RingHandle cover_;
  unsigned n_;
  Coeff zeta_;
};

/// A rank-1 module over the covering ring remembering its covering.
struct KummerModuleDesc {
  CartierModuleDesc module;
  KummerCovering covering;
};

/// Pullback along A^1: extends the ring by a fresh variable; carrier, shift
/// and twist carry over verbatim (the extended Cartier operator then acts by
/// y^a m -> y^{(a+1)/p - 1} kappa(m) automatically).
CartierModuleDesc affine_line_pullback(const CartierModuleDesc& M,
                                       const std::string& new_variable,
                                       const Budgets& budgets = Budgets{});

/// Extension of a fractional submodule to the ring with one fresh variable.
FractionalSubmodule extend_submodule(const FractionalSubmodule& N,
                                     const RingHandle& extended,
                                     const Budgets& budgets = Budgets{});

/// Pullback along the Kummer covering: twist x^s becomes t^{ns}, the carrier
/// substitutes likewise. Requires a pure-power twist and carrier R or x^{-1}R.
KummerModuleDesc kummer_pullback(const CartierModuleDesc& M, const KummerCovering& cov,
                                 const Budgets& budgets = Budgets{});

/// Galois invariants under the identification delta_0 <-> t^{n-1}:
/// { m in R_x : m t^{n-1} in N }, i.e. the t-degree = n-1 (mod n) graded part
/// of N divided by t^{n-1}, expressed over the base via x = t^n.
/// Requires generators homogeneous in t-degree mod n.
FractionalSubmodule galois_invariants(const FractionalSubmodule& N,
                                      const KummerCovering& cov,
                                      const Budgets& budgets = Budgets{});

/// Evaluation-at-1 image: the base module generated by the coefficients of
/// delta_0 over all elements of N (per-monomial graded extraction).
FractionalSubmodule trace_to_base(const FractionalSubmodule& N,
                                  const KummerCovering& cov,
                                  const Budgets& budgets = Budgets{});

}  // namespace cartk

#endif
