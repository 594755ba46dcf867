#include "cartk/geometry.hpp"

#include <algorithm>

namespace cartk {

KummerCovering::KummerCovering(RingHandle base, unsigned degree,
                               const std::string& cover_variable)
    : base_(std::move(base)), n_(degree) {
  const unsigned p = base_->characteristic();
  if (n_ == 0 || n_ % p == 0)
    throw invalid_argument("covering degree must be coprime to p");
  if ((p - 1) % n_ != 0)
    throw invalid_argument("covering degree must divide p-1 so that a root of unity exists");
  std::vector<std::string> vars = base_->variables();
  if (n_ > 1) {
    if (base_->index_of(cover_variable) != RingSpec::npos)
      throw invalid_argument("covering variable '" + cover_variable +
                             "' collides with a base variable");
    vars[base_->filtration_index()] = cover_variable;
  }
  cover_ = make_ring(p, std::move(vars), base_->filtration_index());

  // zeta = g^{(p-1)/n} for a generator g of F_p^*, checked to have order n.
  zeta_ = 1;
  if (n_ > 1) {
    for (Coeff g = 2; g < p; ++g) {
      Coeff cand = base_->pow(g, Integer((p - 1) / n_));
      bool primitive = cand != 1;
      Coeff acc = cand;
      for (unsigned k = 1; k < n_ && primitive; ++k) {
        if (acc == 1) primitive = false;
        acc = base_->mul(acc, cand);
      }
      if (primitive && acc == 1) {
        zeta_ = cand;
        break;
      }
    }
    if (zeta_ == 1) throw invalid_argument("no primitive root of unity found");
  }
}

Polynomial KummerCovering::lift(const Polynomial& f) const {
  require_same_ring(base_, f.ring());
  const std::size_t fi = base_->filtration_index();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Term nt{t.mono, t.coeff};
    nt.mono.e[fi] *= n_;
    terms.push_back(std::move(nt));
  }
  return Polynomial(cover_, std::move(terms));
}

Polynomial KummerCovering::descend(const Polynomial& f) const {
  require_same_ring(cover_, f.ring());
  const std::size_t fi = cover_->filtration_index();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono.e[fi] % n_ != 0)
      throw unsupported_structure("polynomial is not pulled back from the base");
    Term nt{t.mono, t.coeff};
    nt.mono.e[fi] /= n_;
    terms.push_back(std::move(nt));
  }
  return Polynomial(base_, std::move(terms));
}

Polynomial KummerCovering::galois_action(const Polynomial& f, unsigned power) const {
  require_same_ring(cover_, f.ring());
  const std::size_t fi = cover_->filtration_index();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Integer d = t.mono.e[fi] + 1;
    Coeff scale = base_->pow(zeta_, Integer(power) * d);
    terms.push_back(Term{t.mono, base_->mul(t.coeff, scale)});
  }
  return Polynomial(cover_, std::move(terms));
}

CartierModuleDesc affine_line_pullback(const CartierModuleDesc& M,
                                       const std::string& new_variable,
                                       const Budgets& budgets) {
  const RingHandle& ring = M.ring();
  if (ring->index_of(new_variable) != RingSpec::npos)
    throw invalid_argument("variable '" + new_variable + "' already exists");
  std::vector<std::string> vars = ring->variables();
  vars.push_back(new_variable);
  RingHandle extended = make_ring(ring->characteristic(), std::move(vars),
                                  ring->filtration_index());
  FractionalSubmodule carrier = extend_submodule(M.carrier(), extended, budgets);
  auto lift_poly = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Term nt{Monomial(extended->variable_count()), t.coeff};
      std::copy(t.mono.e.begin(), t.mono.e.end(), nt.mono.e.begin());
      terms.push_back(std::move(nt));
    }
    return Polynomial(extended, std::move(terms));
  };
  return CartierModuleDesc(carrier, lift_poly(M.twist()), M.provenance(), budgets);
}

FractionalSubmodule extend_submodule(const FractionalSubmodule& N,
                                     const RingHandle& extended,
                                     const Budgets& budgets) {
  const RingHandle& ring = N.ring();
  if (extended->variable_count() != ring->variable_count() + 1 ||
      extended->filtration_index() != ring->filtration_index())
    throw invalid_argument("extended ring must add exactly one trailing variable");
  std::vector<Polynomial> gens;
  for (const auto& g : N.ideal().generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Term nt{Monomial(extended->variable_count()), t.coeff};
      std::copy(t.mono.e.begin(), t.mono.e.end(), nt.mono.e.begin());
      terms.push_back(std::move(nt));
    }
    gens.emplace_back(extended, std::move(terms));
  }
  return FractionalSubmodule(N.shift(), Ideal(extended, std::move(gens)), budgets);
}

KummerModuleDesc kummer_pullback(const CartierModuleDesc& M, const KummerCovering& cov,
                                 const Budgets& budgets) {
  require_same_ring(M.ring(), cov.base());
  Coeff unit;
  Integer s;
  if (!M.twist().is_filtration_monomial(&unit, &s) || unit != 1)
    throw unsupported_structure("Kummer pullback needs a pure-power twist x^s");
  const FractionalSubmodule& car = M.carrier();
  if (!car.basis().is_unit_ideal() || car.shift() > 1)
    throw unsupported_structure("Kummer pullback supports carriers R and x^{-1}R only");
  Polynomial twist_up =
      Polynomial::filtration_power(cov.cover(), s * cov.degree());
  FractionalSubmodule carrier_up = FractionalSubmodule::fractional_full(
      cov.cover(), car.shift() * cov.degree());
  CartierModuleDesc up(carrier_up, twist_up, Provenance::kummer_pullback, budgets);
  return KummerModuleDesc{up, cov};
}

namespace {

/// t-degree of every monomial mod n; throws if mixed.
unsigned residue_class(const Polynomial& g, unsigned n, std::size_t fi) {
  Integer cls = g.terms().front().mono.e[fi] % n;
  for (const auto& t : g.terms())
    if (t.mono.e[fi] % n != cls)
      throw unsupported_structure("generator is not graded-compatible: " + to_string(g));
  return static_cast<unsigned>(cls.get_ui());
}

}  // namespace

FractionalSubmodule galois_invariants(const FractionalSubmodule& N,
                                      const KummerCovering& cov,
                                      const Budgets& budgets) {
  require_same_ring(N.ring(), cov.cover());
  const unsigned n = cov.degree();
  const std::size_t fi = cov.cover()->filtration_index();
  if (N.is_zero()) return FractionalSubmodule::zero(cov.base());

  // With N = t^{-nu} J, an element m of R_x satisfies m t^{n-1} in N exactly
  // when m t^{n-1+nu} lies in J; so extract the class c = (n-1+nu) mod n of J
  // and shift the result down by delta = floor((n-1+nu)/n) x-powers.
  Integer cls_big = (Integer(n - 1) + N.shift()) % n;
  unsigned cls = static_cast<unsigned>(cls_big.get_ui());
  Integer delta = (Integer(n - 1) + N.shift() - cls) / n;

  std::vector<Polynomial> gens;
  for (const auto& g : N.basis().elements()) {
    unsigned k = residue_class(g, n, fi);
    unsigned j = (cls + n - k) % n;
    Polynomial lifted =
        g * Polynomial::filtration_power(cov.cover(), Integer(j));
    // Divide by t^cls and substitute t^n = x, monomial by monomial.
    std::vector<Term> terms;
    for (const auto& t : lifted.terms()) {
      Term nt{t.mono, t.coeff};
      nt.mono.e[fi] = (nt.mono.e[fi] - cls) / n;
      terms.push_back(std::move(nt));
    }
    gens.emplace_back(cov.base(), std::move(terms));
  }
  return FractionalSubmodule(delta, Ideal(cov.base(), std::move(gens)), budgets);
}

FractionalSubmodule trace_to_base(const FractionalSubmodule& N,
                                  const KummerCovering& cov,
                                  const Budgets& budgets) {
  require_same_ring(N.ring(), cov.cover());
  const unsigned n = cov.degree();
  const std::size_t fi = cov.cover()->filtration_index();
  if (N.is_zero()) return FractionalSubmodule::zero(cov.base());

  // delta_0-coefficient of t^{-nu} h: monomials with t-degree = n-1+nu mod n,
  // divided by t^{n-1+nu}. Exponents may go negative; a common x-shift
  // reabsorbs them.
  Integer offset = Integer(n - 1) + N.shift();
  Integer shift = (offset + n - 1) / n;  // ceil(offset / n)
  std::vector<Polynomial> gens;
  for (const auto& g : N.basis().elements()) {
    for (unsigned j = 0; j < n; ++j) {
      Polynomial lifted = g * Polynomial::filtration_power(cov.cover(), Integer(j));
      std::vector<Term> terms;
      for (const auto& t : lifted.terms()) {
        if ((t.mono.e[fi] - offset) % n != 0) continue;
        Term nt{t.mono, t.coeff};
        nt.mono.e[fi] = (t.mono.e[fi] - offset) / n + shift;  // premultiplied by x^shift
        if (nt.mono.e[fi] < 0)
          throw unsupported_structure("trace extraction produced a bad exponent");
        terms.push_back(std::move(nt));
      }
      Polynomial extracted(cov.base(), std::move(terms));
      if (!extracted.is_zero()) gens.push_back(std::move(extracted));
    }
  }
  return FractionalSubmodule(shift, Ideal(cov.base(), std::move(gens)), budgets);
}

}  // namespace cartk
