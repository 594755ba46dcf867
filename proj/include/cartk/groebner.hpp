#ifndef CARTK_GROEBNER_HPP
#define CARTK_GROEBNER_HPP

#include <string>
#include <vector>

#include "cartk/poly.hpp"

namespace cartk {

struct Budgets {
  long pair_budget = 1000000;   // Buchberger pair reductions
  int e_max = 6;                // user-facing Frobenius level bound
  int chain_budget = 40;        // descending-chain iterations
  int level_hard_cap = 40;      // absolute cap on summed Cartier levels
};

/// Finitely generated ideal. Zero generators are dropped on construction;
/// the zero ideal is the empty list.
class Ideal {
 public:
  explicit Ideal(RingHandle ring) : ring_(std::move(ring)) {}
  Ideal(RingHandle ring, std::vector<Polynomial> generators);

  static Ideal zero(const RingHandle& ring) { return Ideal(ring); }
  static Ideal unit(const RingHandle& ring);
  static Ideal principal(Polynomial g);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  RingHandle ring_;
  std::vector<Polynomial> gens_;
};

/// The unique reduced grevlex Groebner basis of an ideal: monic, autoreduced,
/// sorted by ascending leading monomial. Two ideals are equal iff their
/// ReducedGB elements agree term by term.
class ReducedGB {
 public:
  const RingHandle& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const;

  bool operator==(const ReducedGB& other) const;
  bool operator!=(const ReducedGB& other) const { return !(*this == other); }

  /// One generator per line, canonical form, sorted.
  std::string serialize() const;

 private:
  friend ReducedGB reduce_basis(const Ideal&, const Budgets&);
  RingHandle ring_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the product/chain criteria and final
/// autoreduction. Throws budget_exceeded past budgets.pair_budget reductions.
ReducedGB reduce_basis(const Ideal& ideal, const Budgets& budgets = Budgets{});

/// Remainder of multivariate division by G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const ReducedGB& G);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b, const Budgets& budgets = Budgets{});
Ideal scale_by_poly(const Polynomial& g, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b, const Budgets& budgets = Budgets{});
bool ideal_member(const Polynomial& f, const Ideal& ideal,
                  const Budgets& budgets = Budgets{});
bool ideal_contains(const Ideal& big, const Ideal& small,
                    const Budgets& budgets = Budgets{});

/// Ideal with the reduced basis as its generator list (canonical form).
Ideal canonical_ideal(const Ideal& ideal, const Budgets& budgets = Budgets{});

// Monomial-ideal helpers (used by the filtration axiom checks, where every
// graded piece in scope is monomial).
bool is_monomial_ideal(const ReducedGB& G);
/// (I : m) for a monomial ideal I and a monomial m.
Ideal monomial_colon(const ReducedGB& G, const Monomial& m);
/// Intersection of two monomial ideals.
Ideal monomial_intersection(const ReducedGB& a, const ReducedGB& b);

}  // namespace cartk

#endif
