#include "cartk/ring.hpp"

#include <algorithm>
#include <cctype>

namespace cartk {

namespace {

bool is_small_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSpec::RingSpec(unsigned characteristic, std::vector<std::string> variables,
                   std::size_t filtration_index)
    : p_(characteristic), vars_(std::move(variables)), filt_(filtration_index) {
  if (p_ < 3 || p_ > 97 || !is_small_prime(p_))
    throw invalid_argument("characteristic must be an odd prime in [3, 97], got " +
                           std::to_string(p_));
  if (vars_.empty()) throw invalid_argument("ring needs at least one variable");
  for (const auto& v : vars_)
    if (!valid_identifier(v))
      throw invalid_argument("invalid variable name '" + v + "'");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw invalid_argument("duplicate variable name '" + vars_[i] + "'");
  if (filt_ >= vars_.size())
    throw invalid_argument("filtration variable index out of range");
}

std::size_t RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return npos;
}

Coeff RingSpec::inv(Coeff a) const {
  if (a % p_ == 0) throw invalid_argument("division by zero in F_p");
  return pow(a, Integer(p_ - 2));
}

Coeff RingSpec::pow(Coeff a, const Integer& n) const {
  if (n < 0) throw invalid_argument("negative exponent in F_p power");
  Coeff base = a % p_;
  Coeff result = 1;
  Integer e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff RingSpec::reduce(const Integer& n) const {
  Integer r = n % Integer(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r.get_ui());
}

RingHandle make_ring(unsigned characteristic, std::vector<std::string> variables,
                     std::size_t filtration_index) {
  return std::make_shared<const RingSpec>(characteristic, std::move(variables),
                                          filtration_index);
}

void require_same_ring(const RingHandle& a, const RingHandle& b) {
  if (!a || !b) throw ring_mismatch("operand has no ring");
  if (a.get() == b.get()) return;
  if (*a != *b) throw ring_mismatch("operands live in different rings");
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw invalid_argument("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace cartk
