#ifndef CARTK_POLY_HPP
#define CARTK_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartk/ring.hpp"

namespace cartk {

/// Exponent vector, one arbitrary-precision entry per ring variable.
struct Monomial {
  std::vector<Integer> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars) {}
  static Monomial one(std::size_t nvars) { return Monomial(nvars); }

  Integer total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller must ensure divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  Monomial gcd_with(const Monomial& other) const;
  /// Componentwise multiple (m^k as a monomial).
  Monomial scaled(const Integer& k) const;

  bool operator==(const Monomial& other) const { return e == other.e; }
  bool operator!=(const Monomial& other) const { return e != other.e; }
};

/// Graded reverse lexicographic order w.r.t. the declared variable order.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse exact multivariate polynomial over F_p. Terms are kept in strictly
/// descending grevlex order with nonzero coefficients; this makes the
/// serialized form canonical and equality a plain vector comparison.
class Polynomial {
 public:
  explicit Polynomial(RingHandle ring) : ring_(std::move(ring)) {}
  Polynomial(RingHandle ring, std::vector<Term> terms);

  static Polynomial zero(const RingHandle& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingHandle& ring, Coeff c);
  static Polynomial monomial(const RingHandle& ring, Monomial m, Coeff c = 1);
  /// The i-th ring variable as a polynomial.
  static Polynomial variable(const RingHandle& ring, std::size_t index);
  /// variable(filtration_index)^k for k >= 0.
  static Polynomial filtration_power(const RingHandle& ring, const Integer& k);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when the polynomial is c * x_filt^k (a pure power of the
  /// filtration variable); returns (c, k) through the out-params.
  bool is_filtration_monomial(Coeff* c_out = nullptr, Integer* k_out = nullptr) const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  Coeff leading_coeff() const { return leading_term().coeff; }
  Integer degree() const;  // total degree; -1 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  /// Binary exponentiation split along base-p digits: in characteristic p the
  /// p^i-th power only rescales exponents, so huge exponents stay cheap.
  Polynomial pow(const Integer& n) const;
  /// Frobenius power f^(p^e): exponents scaled by p^e, coefficients fixed.
  Polynomial frobenius_power(unsigned e) const;
  Polynomial monic() const;

  /// Largest k with x_filt^k dividing every term (0 for the zero polynomial).
  Integer filtration_valuation() const;
  /// Exact division by x_filt^k.
  Polynomial divide_by_filtration_power(const Integer& k) const;

 private:
  RingHandle ring_;
  std::vector<Term> terms_;  // strictly descending grevlex, no zero coeffs
};

/// Recursive-descent parser for the grammar: integer literals, ring
/// variables, + - * ^ and parentheses; '^' takes a nonnegative decimal
/// exponent bounded by max_exponent.
Polynomial parse_polynomial(const std::string& text, const RingHandle& ring,
                            const Integer& max_exponent = Integer(1000000000));

/// Canonical text form: descending grevlex, coefficients in 0..p-1, '*'
/// between coefficient and monomial, '^' for exponents >= 2, " + " joins.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingSpec& ring);

enum class ArithOp { add, sub, mul, pow };

/// Dispatcher used by the CLI; pow reads its exponent from `exponent`.
Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial* b,
                      const Integer* exponent);

}  // namespace cartk

#endif
