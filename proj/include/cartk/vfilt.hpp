#ifndef CARTK_VFILT_HPP
#define CARTK_VFILT_HPP

#include <string>
#include <vector>

#include "cartk/geometry.hpp"

namespace cartk {

/// One stored segment: `value` is valid on (previous entry, t]; the first
/// entry's segment additionally covers the window start.
struct FiltrationEntry {
  Rational t;
  FractionalSubmodule value;
};

/// A finitely-jumping descending filtration on a window, stored
/// left-continuously: the value at a jump is the value of the segment ending
/// there. Carries the action data used by the axiom checker (multiplication
/// by f on representatives, and the p-power map as structural action).
class FiltrationTable {
 public:
  FiltrationTable(Rational lo, Rational hi, std::vector<FiltrationEntry> entries,
                  Polynomial action_element, bool has_actions = true);

  const Rational& window_lo() const { return lo_; }
  const Rational& window_hi() const { return hi_; }
  const std::vector<FiltrationEntry>& entries() const { return entries_; }
  std::vector<FiltrationEntry>& mutable_entries() { return entries_; }
  const Polynomial& action_element() const { return f_; }
  bool has_actions() const { return has_actions_; }
  const RingHandle& ring() const { return f_.ring(); }

  const FractionalSubmodule& eval(const Rational& t) const;
  /// Jump points: every entry except the final window-closing one.
  std::vector<Rational> jump_points() const;

 private:
  Rational lo_, hi_;
  std::vector<FiltrationEntry> entries_;
  Polynomial f_;
  bool has_actions_;
};

/// Rank-1 tame descriptor: trivialized by the degree-n covering with twist
/// exponent s; representable only when (p-1) | n*s.
struct TameDescriptor {
  RingHandle base;
  unsigned degree;    // n, with n | p-1
  Integer twist_exponent;  // s >= 0
};

void validate_descriptor(const TameDescriptor& d);

/// V^a = t^{ceil(a)} S with jumps at the integers.
FiltrationTable trivial_v_filtration(const RingHandle& ring, const Rational& lo,
                                     const Rational& hi,
                                     const Budgets& budgets = Budgets{});

/// Single V value of the tame construction at parameter t: the trivial
/// filtration upstairs shifted by t^{n-1+ns/(p-1)} (the delta_0
/// identification times the trivialization unit) and pushed through the
/// Galois invariants.
FractionalSubmodule tame_v_value(const TameDescriptor& d, const Rational& t,
                                 const Budgets& budgets = Budgets{});

/// The tame V-filtration on a window inside [-1 + 1/n, infinity).
FiltrationTable v_filtration(const TameDescriptor& d, const Rational& lo,
                             const Rational& hi, const Budgets& budgets = Budgets{});

struct VAxiomRow {
  std::string axiom;    // "i".."v", possibly with the parameter appended
  bool pass;
  std::string witness;  // serialized offending value, when failing
  std::string notes;
};

struct VAxiomReport {
  std::vector<VAxiomRow> rows;
  bool all_pass;
};

/// Five-axiom checker on the stored grid: (i) finite generation of V^0,
/// (ii) f V^i = V^{i+1}, (iii) alpha(V^i) <= V^{ip}, (iv) Frobenius transport
/// of graded annihilators, (v) multiplication by f on graded pieces.
VAxiomReport check_v_axioms(const FiltrationTable& V, const Polynomial& f,
                            const Budgets& budgets = Budgets{});

struct CompareRow {
  Rational t;
  bool pass;
  std::string v_value;
  std::string tau_value;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  bool graded_pass;        // Gr^0_V vs Gr^1_tau annihilator comparison
  std::string graded_notes;
  bool all_pass;
};

/// Pointwise comparison V^t == tau_left(model, x^{t+1}) on a grid of the
/// window, plus the graded comparison at 0.
CompareReport compare_v_with_tau(const TameDescriptor& d, const Rational& lo,
                                 const Rational& hi,
                                 const Budgets& budgets = Budgets{});

struct CounterexampleReport {
  bool member;             // expected false for 1 <= s <= p-2
  Polynomial witness;      // the nonzero normal form
  std::vector<std::string> ideal_basis;
  std::string interpretation;
};

/// Non-membership of x^{sp} in (t^p, x^{sp} t^{p-1}) over F_p[x,t]: the
/// obstruction to the p-power axiom for the graph-embedding pushforward.
CounterexampleReport graph_embedding_counterexample(unsigned p, unsigned s,
                                                    const Budgets& budgets = Budgets{});

/// Annihilator of the cyclic quotient num/den (monomial ideals only).
Ideal annihilator_of_quotient(const FractionalSubmodule& num,
                              const FractionalSubmodule& den,
                              const Budgets& budgets = Budgets{});

}  // namespace cartk

#endif
