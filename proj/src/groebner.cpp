#include "cartk/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace cartk {

Ideal::Ideal(RingHandle ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingHandle& ring) {
  return Ideal(ring, {Polynomial::constant(ring, 1)});
}

Ideal Ideal::principal(Polynomial g) {
  RingHandle r = g.ring();
  return Ideal(r, {std::move(g)});
}

bool ReducedGB::is_unit_ideal() const {
  return elements_.size() == 1 && elements_[0].is_constant() &&
         !elements_[0].is_zero();
}

bool ReducedGB::operator==(const ReducedGB& other) const {
  require_same_ring(ring_, other.ring_);
  return elements_ == other.elements_;
}

std::string ReducedGB::serialize() const {
  std::ostringstream os;
  for (const auto& g : elements_) os << to_string(g) << "\n";
  return os.str();
}

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial lcm = f.leading_monomial().lcm_with(g.leading_monomial());
  const RingHandle& ring = f.ring();
  Coeff cf = ring->inv(f.leading_coeff());
  Coeff cg = ring->inv(g.leading_coeff());
  return f.times_term(lcm / f.leading_monomial(), cf) -
         g.times_term(lcm / g.leading_monomial(), cg);
}

Polynomial reduce_fully(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial h = f;
  Polynomial remainder(f.ring());
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(h.leading_monomial())) {
        Coeff c = h.ring()->mul(h.leading_coeff(), h.ring()->inv(g.leading_coeff()));
        h = h - g.times_term(h.leading_monomial() / g.leading_monomial(), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial::monomial(h.ring(), h.leading_monomial(),
                                                   h.leading_coeff());
      h = h - Polynomial::monomial(h.ring(), h.leading_monomial(), h.leading_coeff());
    }
  }
  return remainder;
}

void sort_by_leading(std::vector<Polynomial>& basis) {
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
}

}  // namespace

ReducedGB reduce_basis(const Ideal& ideal, const Budgets& budgets) {
  ReducedGB out;
  out.ring_ = ideal.ring();
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) basis.push_back(g.monic());
  sort_by_leading(basis);

  // Pair queue ordered by (grevlex of lcm, i, j): the normal strategy.
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return grevlex_less(a.lcm, b.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::vector<Pair> queue;
  auto push_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      queue.push_back(Pair{basis[i].leading_monomial().lcm_with(
                               basis[n].leading_monomial()),
                           i, n});
  };
  for (std::size_t n = 1; n < basis.size(); ++n) push_pairs_for(n);

  std::set<std::pair<std::size_t, std::size_t>> done;
  long steps = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    done.insert({pr.i, pr.j});

    const Monomial& li = basis[pr.i].leading_monomial();
    const Monomial& lj = basis[pr.j].leading_monomial();
    // Product criterion: coprime leading monomials reduce to zero.
    if (li.lcm_with(lj) == li * lj) continue;
    // Chain criterion: a third element dividing the lcm whose two pairs are
    // already settled makes this pair redundant.
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    if (++steps > budgets.pair_budget)
      throw budget_exceeded("Buchberger pair budget exceeded");
    Polynomial r = reduce_fully(spoly(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  sort_by_leading(basis);
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }
  // Interreduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial reduced = reduce_fully(minimal[i], others).monic();
      if (reduced != minimal[i]) {
        changed = true;
        if (reduced.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = reduced;
        }
      }
    }
  }
  sort_by_leading(minimal);
  out.elements_ = std::move(minimal);
  return out;
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& G) {
  require_same_ring(f.ring(), G.ring());
  return reduce_fully(f, G.elements());
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b, const Budgets& budgets) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return canonical_ideal(Ideal(a.ring(), std::move(gens)), budgets);
}

Ideal scale_by_poly(const Polynomial& g, const Ideal& ideal) {
  require_same_ring(g.ring(), ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators()) gens.push_back(g * h);
  return Ideal(ideal.ring(), std::move(gens));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budgets& budgets) {
  return reduce_basis(a, budgets) == reduce_basis(b, budgets);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const Budgets& budgets) {
  return normal_form(f, reduce_basis(ideal, budgets)).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small, const Budgets& budgets) {
  ReducedGB G = reduce_basis(big, budgets);
  for (const auto& g : small.generators())
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

Ideal canonical_ideal(const Ideal& ideal, const Budgets& budgets) {
  ReducedGB G = reduce_basis(ideal, budgets);
  return Ideal(ideal.ring(), G.elements());
}

bool is_monomial_ideal(const ReducedGB& G) {
  return std::all_of(G.elements().begin(), G.elements().end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

Ideal monomial_colon(const ReducedGB& G, const Monomial& m) {
  if (!is_monomial_ideal(G))
    throw unsupported_structure("colon requires a monomial ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : G.elements()) {
    Monomial q = g.leading_monomial() / g.leading_monomial().gcd_with(m);
    gens.push_back(Polynomial::monomial(G.ring(), q, 1));
  }
  return canonical_ideal(Ideal(G.ring(), std::move(gens)));
}

Ideal monomial_intersection(const ReducedGB& a, const ReducedGB& b) {
  if (!is_monomial_ideal(a) || !is_monomial_ideal(b))
    throw unsupported_structure("intersection requires monomial ideals");
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.elements())
    for (const auto& g : b.elements())
      gens.push_back(Polynomial::monomial(
          a.ring(), f.leading_monomial().lcm_with(g.leading_monomial()), 1));
  return canonical_ideal(Ideal(a.ring(), std::move(gens)));
}

}  // namespace cartk
