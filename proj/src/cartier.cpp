#include "cartk/cartier.hpp"

#include <algorithm>
#include <sstream>

namespace cartk {

namespace {

bool all_divisible_by_filtration(const ReducedGB& G) {
  if (G.elements().empty()) return false;
  const std::size_t fi = G.ring()->filtration_index();
  for (const auto& g : G.elements())
    for (const auto& t : g.terms())
      if (t.mono.e[fi] == 0) return false;
  return true;
}

}  // namespace

FractionalSubmodule::FractionalSubmodule(Integer shift, Ideal ideal,
                                         const Budgets& budgets)
    : shift_(std::move(shift)), ideal_(std::move(ideal)) {
  if (shift_ < 0) throw invalid_argument("fractional shift must be >= 0");
  basis_ = reduce_basis(ideal_, budgets);
  if (basis_.is_zero_ideal()) {
    shift_ = 0;
    ideal_ = Ideal::zero(ideal_.ring());
    return;
  }
  // Strip common x-factors so the stored shift is minimal.
  while (shift_ > 0 && all_divisible_by_filtration(basis_)) {
    std::vector<Polynomial> gens;
    for (const auto& g : basis_.elements())
      gens.push_back(g.divide_by_filtration_power(1));
    ideal_ = Ideal(ideal_.ring(), std::move(gens));
    basis_ = reduce_basis(ideal_, budgets);
    shift_ -= 1;
  }
  ideal_ = Ideal(ideal_.ring(), basis_.elements());
}

FractionalSubmodule FractionalSubmodule::zero(const RingHandle& ring) {
  return FractionalSubmodule(Integer(0), Ideal::zero(ring));
}

FractionalSubmodule FractionalSubmodule::full(const RingHandle& ring) {
  return FractionalSubmodule(Integer(0), Ideal::unit(ring));
}

FractionalSubmodule FractionalSubmodule::fractional_full(const RingHandle& ring,
                                                         const Integer& shift) {
  return FractionalSubmodule(shift, Ideal::unit(ring));
}

bool FractionalSubmodule::operator==(const FractionalSubmodule& other) const {
  require_same_ring(ring(), other.ring());
  return shift_ == other.shift_ && basis_ == other.basis_;
}

bool FractionalSubmodule::contains(const FractionalSubmodule& other,
                                   const Budgets& budgets) const {
  require_same_ring(ring(), other.ring());
  // x^{-m} J <= x^{-n} I  iff  x^n J <= x^m I.
  Polynomial xn = Polynomial::filtration_power(ring(), shift_);
  Polynomial xm = Polynomial::filtration_power(ring(), other.shift_);
  return ideal_contains(scale_by_poly(xm, ideal_), scale_by_poly(xn, other.ideal_),
                        budgets);
}

bool FractionalSubmodule::contains_element(const Polynomial& f,
                                           const Integer& elem_shift,
                                           const Budgets& budgets) const {
  FractionalSubmodule elem(elem_shift, Ideal::principal(f), budgets);
  return contains(elem, budgets);
}

FractionalSubmodule FractionalSubmodule::plus(const FractionalSubmodule& other,
                                              const Budgets& budgets) const {
  require_same_ring(ring(), other.ring());
  Integer s = std::max(shift_, other.shift_);
  Polynomial xa = Polynomial::filtration_power(ring(), s - shift_);
  Polynomial xb = Polynomial::filtration_power(ring(), s - other.shift_);
  Ideal summed = ideal_sum(scale_by_poly(xa, ideal_), scale_by_poly(xb, other.ideal_));
  return FractionalSubmodule(s, std::move(summed), budgets);
}

FractionalSubmodule FractionalSubmodule::times_filtration_power(
    const Integer& k, const Budgets& budgets) const {
  if (is_zero()) return *this;
  Integer ns = shift_ - k;
  if (ns >= 0) return FractionalSubmodule(ns, ideal_, budgets);
  Polynomial xk = Polynomial::filtration_power(ring(), -ns);
  return FractionalSubmodule(Integer(0), scale_by_poly(xk, ideal_), budgets);
}

FractionalSubmodule FractionalSubmodule::times_poly(const Polynomial& g,
                                                    const Budgets& budgets) const {
  return FractionalSubmodule(shift_, scale_by_poly(g, ideal_), budgets);
}

std::string FractionalSubmodule::serialize() const {
  std::ostringstream os;
  os << "shift " << shift_.get_str() << "\n" << basis_.serialize();
  return os.str();
}

CartierModuleDesc::CartierModuleDesc(FractionalSubmodule carrier, Polynomial twist,
                                     Provenance provenance, const Budgets& budgets)
    : carrier_(std::move(carrier)), twist_(std::move(twist)), provenance_(provenance) {
  require_same_ring(carrier_.ring(), twist_.ring());
  if (carrier_.is_zero()) return;
  // The carrier must be stable under its own structural map.
  CartierAlgebraSpec trivial(Polynomial::constant(ring(), 1), Rational(0));
  FractionalSubmodule image = apply_structure(*this, trivial, 1, carrier_, budgets);
  if (!carrier_.contains(image, budgets))
    throw unsupported_structure(
        "carrier is not stable under the twisted structural map");
}

int level_budget(const Rational& t, unsigned p, const Budgets& budgets,
                 long slack_deg, long f_deg) {
  Integer den = t.get_den();
  int k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  Integer target = 4 * den * (p - 1) * std::max(f_deg, 1l) * (ceil_q(t) + 2) *
                   (std::max(slack_deg, 0l) + 1);
  Integer power = 1;
  int extra = 0;
  while (power < target) {
    power *= p;
    ++extra;
  }
  int level = std::max({k + extra, 6, budgets.e_max});
  if (level > budgets.level_hard_cap)
    throw budget_exceeded("Cartier level budget " + std::to_string(level) +
                          " exceeds hard cap " +
                          std::to_string(budgets.level_hard_cap));
  return level;
}

namespace {

/// Shared core: kappa_M^e(f^a * x^{-n} A) at the carrier shift n, with the
/// f-exponent a consumed chunkwise from the least significant base-p digit.
Ideal structure_image_ideal(const CartierModuleDesc& M, const Polynomial& f,
                            const Integer& a, unsigned e, const Ideal& aligned,
                            const Budgets& budgets) {
  const RingHandle& ring = M.ring();
  const unsigned p = ring->characteristic();
  const Integer& n = M.carrier().shift();
  Polynomial step_twist =
      M.twist() * Polynomial::filtration_power(ring, n * (p - 1));
  Ideal current = aligned;
  Integer rest = a;
  for (unsigned k = 1; k <= e; ++k) {
    Integer chunk;
    if (k < e) {
      Integer q, r;
      mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p);
      chunk = r;
      rest = q;
    } else {
      chunk = rest;  // the top level absorbs the remaining quotient
    }
    Polynomial mult = step_twist * f.pow(chunk);
    current = frobenius_root(scale_by_poly(mult, current), 1, budgets);
  }
  return current;
}

/// Align N (contained in the carrier) to the carrier's stored shift.
Ideal align_to_carrier(const CartierModuleDesc& M, const FractionalSubmodule& N,
                       const Budgets& budgets) {
  const Integer& n = M.carrier().shift();
  if (N.shift() > n)
    throw not_contained("submodule has deeper shift than the carrier");
  Polynomial x_up = Polynomial::filtration_power(M.ring(), n - N.shift());
  return canonical_ideal(scale_by_poly(x_up, N.ideal()), budgets);
}

}  // namespace

FractionalSubmodule apply_structure(const CartierModuleDesc& M,
                                    const CartierAlgebraSpec& alg, unsigned e,
                                    const FractionalSubmodule& N,
                                    const Budgets& budgets) {
  require_same_ring(M.ring(), N.ring());
  require_same_ring(M.ring(), alg.f.ring());
  if (e == 0 || static_cast<int>(e) > budgets.level_hard_cap)
    throw invalid_argument("structure level e must be in [1, " +
                           std::to_string(budgets.level_hard_cap) + "]");
  if (N.is_zero()) return FractionalSubmodule::zero(M.ring());
  if (!M.carrier().contains(N, budgets))
    throw not_contained("operand is not contained in the carrier");
  Integer pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), M.ring()->characteristic(), e);
  Integer a = ceil_q(alg.t * Rational(pe));
  Ideal aligned = align_to_carrier(M, N, budgets);
  Ideal image = structure_image_ideal(M, alg.f, a, e, aligned, budgets);
  return FractionalSubmodule(M.carrier().shift(), std::move(image), budgets);
}

FractionalSubmodule cartier_plus(const CartierModuleDesc& M,
                                 const CartierAlgebraSpec& alg,
                                 const FractionalSubmodule& N,
                                 const Budgets& budgets) {
  require_same_ring(M.ring(), N.ring());
  if (N.is_zero()) return FractionalSubmodule::zero(M.ring());
  if (!M.carrier().contains(N, budgets))
    throw not_contained("operand is not contained in the carrier");
  const unsigned p = M.ring()->characteristic();
  long slack = M.twist().degree().get_si() + 1;
  long f_deg = alg.f.is_zero() ? 1 : alg.f.degree().get_si();
  const int levels = level_budget(alg.t, p, budgets, slack, f_deg);
  Ideal aligned = align_to_carrier(M, N, budgets);

  FractionalSubmodule sum = FractionalSubmodule::zero(M.ring());
  FractionalSubmodule prev = sum;
  bool tail_stable = false;
  for (int e = 1; e <= levels; ++e) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned>(e));
    Integer a = ceil_q(alg.t * Rational(pe));
    Ideal image = structure_image_ideal(M, alg.f, a, static_cast<unsigned>(e),
                                        aligned, budgets);
    FractionalSubmodule term(M.carrier().shift(), std::move(image), budgets);
    prev = sum;
    sum = sum.plus(term, budgets);
    tail_stable = (e > 1 && sum == prev);
  }
  if (!tail_stable)
    throw stabilization_failure(
        "level sum still growing at the level budget; raise e_max");
  return sum;
}

FractionalSubmodule f_pure_part(const CartierModuleDesc& M,
                                const CartierAlgebraSpec& alg,
                                const Budgets& budgets) {
  FractionalSubmodule current = M.carrier();
  int equal_streak = 0;
  for (int i = 0; i < budgets.chain_budget; ++i) {
    if (current.is_zero()) return current;
    FractionalSubmodule next = cartier_plus(M, alg, current, budgets);
    if (next == current) {
      // One equality of a C_+-iterate chain is already a fixed point; the
      // second confirms it against accidental representation collisions.
      if (++equal_streak >= 2) return next;
    } else {
      equal_streak = 0;
    }
    current = next;
  }
  throw stabilization_failure("descending chain did not stabilize within budget");
}

bool is_f_pure(const CartierModuleDesc& M, const CartierAlgebraSpec& alg,
               const Budgets& budgets) {
  return f_pure_part(M, alg, budgets) == M.carrier();
}

bool is_nilpotent(const CartierModuleDesc& M, const CartierAlgebraSpec& alg,
                  const Budgets& budgets) {
  return f_pure_part(M, alg, budgets).is_zero();
}

}  // namespace cartk
