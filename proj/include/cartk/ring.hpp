#ifndef CARTK_RING_HPP
#define CARTK_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cartk/errors.hpp"

namespace cartk {

using Coeff = std::uint32_t;     // residue in [0, p)
using Integer = mpz_class;       // arbitrary-precision integer
using Rational = mpq_class;      // exact rational, always canonicalized

/// A polynomial ring F_p[x_1,...,x_n] with a distinguished filtration
/// variable (the coordinate all fractional shifts and coverings run along).
class RingSpec {
 public:
  RingSpec(unsigned characteristic, std::vector<std::string> variables,
           std::size_t filtration_index = 0);

  unsigned characteristic() const { return p_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  std::size_t filtration_index() const { return filt_; }
  const std::string& filtration_variable() const { return vars_[filt_]; }

  /// Index of a variable name, or npos.
  std::size_t index_of(const std::string& name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool operator==(const RingSpec& other) const {
    return p_ == other.p_ && vars_ == other.vars_ && filt_ == other.filt_;
  }
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

  // Coefficient arithmetic in F_p.
  Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
  Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((std::uint64_t(a) * b) % p_);
  }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, const Integer& n) const;
  /// Reduce an arbitrary integer into [0, p).
  Coeff reduce(const Integer& n) const;

 private:
  unsigned p_;
  std::vector<std::string> vars_;
  std::size_t filt_;
};

using RingHandle = std::shared_ptr<const RingSpec>;

RingHandle make_ring(unsigned characteristic, std::vector<std::string> variables,
                     std::size_t filtration_index = 0);

/// Throws ring_mismatch unless both handles denote the same ring.
void require_same_ring(const RingHandle& a, const RingHandle& b);

// Exact rational helpers.
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);
Rational parse_rational(const std::string& text);   // "a/b" or "a"
std::string rational_to_string(const Rational& q);

}  // namespace cartk

#endif
