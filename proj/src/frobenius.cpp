#include "cartk/frobenius.hpp"

namespace cartk {

Polynomial FrobeniusDecomposition::reassemble() const {
  Polynomial sum(ring_);
  for (const auto& [a, ga] : components_)
    sum = sum + ga.frobenius_power(level_) * Polynomial::monomial(ring_, a, 1);
  return sum;
}

FrobeniusDecomposition frobenius_decompose(const Polynomial& g, unsigned e,
                                           const Budgets& budgets) {
  if (e == 0 || static_cast<int>(e) > budgets.e_max)
    throw invalid_argument("Frobenius level must satisfy 1 <= e <= " +
                           std::to_string(budgets.e_max));
  FrobeniusDecomposition dec(g.ring(), e);
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), g.ring()->characteristic(), e);
  const std::size_t n = g.ring()->variable_count();
  for (const auto& t : g.terms()) {
    Monomial a(n), quot(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer qi, ri;
      mpz_fdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), t.mono.e[i].get_mpz_t(),
                  q.get_mpz_t());
      quot.e[i] = qi;
      a.e[i] = ri;
    }
    Polynomial piece = Polynomial::monomial(g.ring(), quot, t.coeff);
    auto it = dec.components_.find(a);
    if (it == dec.components_.end())
      dec.components_.emplace(std::move(a), std::move(piece));
    else
      it->second = it->second + piece;
  }
  // Mixed-sign cancellation can empty a component.
  for (auto it = dec.components_.begin(); it != dec.components_.end();) {
    if (it->second.is_zero())
      it = dec.components_.erase(it);
    else
      ++it;
  }
  return dec;
}

Ideal frobenius_root(const Ideal& ideal, unsigned e, const Budgets& budgets) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    FrobeniusDecomposition dec = frobenius_decompose(g, e, budgets);
    for (const auto& [a, ga] : dec.components()) gens.push_back(ga);
  }
  return canonical_ideal(Ideal(ideal.ring(), std::move(gens)), budgets);
}

Ideal cartier_image(const Polynomial& g, const Ideal& ideal, unsigned e,
                    const Budgets& budgets) {
  return frobenius_root(scale_by_poly(g, ideal), e, budgets);
}

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace cartk
