#ifndef CARTK_FROBENIUS_HPP
#define CARTK_FROBENIUS_HPP

#include <map>

#include "cartk/groebner.hpp"

namespace cartk {

/// Comparator giving maps over monomial keys a deterministic order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(a, b);
  }
};

/// Decomposition of g along the Frobenius basis at level e:
///   g = sum_a g_a^{p^e} * x^a  with a running over [0, p^e)^n.
/// Only nonzero components are stored.
class FrobeniusDecomposition {
 public:
  FrobeniusDecomposition(RingHandle ring, unsigned level)
      : ring_(std::move(ring)), level_(level) {}

  unsigned level() const { return level_; }
  const RingHandle& ring() const { return ring_; }
  const std::map<Monomial, Polynomial, MonomialLess>& components() const {
    return components_;
  }

  /// Exact reassembly sum_a g_a^{p^e} x^a.
  Polynomial reassemble() const;

 private:
  friend FrobeniusDecomposition frobenius_decompose(const Polynomial&, unsigned,
                                                    const Budgets&);
  RingHandle ring_;
  unsigned level_;
  std::map<Monomial, Polynomial, MonomialLess> components_;
};

/// Write each monomial exponent as m = p^e q + a with a in [0, p^e)^n; the
/// coefficient contributes its (unique) p^e-th root, which in F_p is itself.
FrobeniusDecomposition frobenius_decompose(const Polynomial& g, unsigned e,
                                           const Budgets& budgets = Budgets{});

/// Smallest ideal J with I contained in J^{[p^e]}; generated by all
/// decomposition components of the generators of I.
Ideal frobenius_root(const Ideal& ideal, unsigned e, const Budgets& budgets = Budgets{});

/// kappa^e(g * I) under the trivialization sending the top basis monomial
/// x_1^{p-1}...x_n^{p-1} to 1; equals frobenius_root(g * I, e).
Ideal cartier_image(const Polynomial& g, const Ideal& ideal, unsigned e,
                    const Budgets& budgets = Budgets{});

/// I^{[p^e]}: the ideal generated by the p^e-th powers of the generators.
Ideal bracket_power(const Ideal& ideal, unsigned e);

}  // namespace cartk

#endif
