#include "cartk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cartk {

Integer Monomial::total_degree() const {
  Integer d = 0;
  for (const auto& x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + other.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - other.e[i];
  return r;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], other.e[i]);
  return r;
}

Monomial Monomial::gcd_with(const Monomial& other) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(e[i], other.e[i]);
  return r;
}

Monomial Monomial::scaled(const Integer& k) const {
  Monomial r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * k;
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  Integer da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Equal degree: the monomial with the larger exponent in the last
  // differing variable is the smaller one.
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

namespace {

struct DescendingGrevlex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(b, a);
  }
};

std::vector<Term> from_accumulator(std::map<Monomial, Coeff, DescendingGrevlex>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, c});
  return out;
}

}  // namespace

Polynomial::Polynomial(RingHandle ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  std::map<Monomial, Coeff, DescendingGrevlex> acc;
  for (auto& t : terms) {
    if (t.mono.e.size() != ring_->variable_count())
      throw invalid_argument("exponent vector has wrong arity");
    Coeff c = t.coeff % ring_->characteristic();
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(std::move(t.mono), c);
    else
      it->second = ring_->add(it->second, c);
  }
  terms_ = from_accumulator(std::move(acc));
}

Polynomial Polynomial::constant(const RingHandle& ring, Coeff c) {
  Polynomial f(ring);
  c %= ring->characteristic();
  if (c != 0) f.terms_.push_back(Term{Monomial::one(ring->variable_count()), c});
  return f;
}

Polynomial Polynomial::monomial(const RingHandle& ring, Monomial m, Coeff c) {
  Polynomial f(ring);
  c %= ring->characteristic();
  if (m.e.size() != ring->variable_count())
    throw invalid_argument("exponent vector has wrong arity");
  if (c != 0) f.terms_.push_back(Term{std::move(m), c});
  return f;
}

Polynomial Polynomial::variable(const RingHandle& ring, std::size_t index) {
  Monomial m(ring->variable_count());
  m.e.at(index) = 1;
  return monomial(ring, std::move(m), 1);
}

Polynomial Polynomial::filtration_power(const RingHandle& ring, const Integer& k) {
  if (k < 0) throw invalid_argument("negative filtration power");
  Monomial m(ring->variable_count());
  m.e[ring->filtration_index()] = k;
  return monomial(ring, std::move(m), 1);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_filtration_monomial(Coeff* c_out, Integer* k_out) const {
  if (terms_.size() != 1) return false;
  const auto& m = terms_[0].mono;
  for (std::size_t i = 0; i < m.e.size(); ++i)
    if (i != ring_->filtration_index() && m.e[i] != 0) return false;
  if (c_out) *c_out = terms_[0].coeff;
  if (k_out) *k_out = m.e[ring_->filtration_index()];
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw invalid_argument("zero polynomial has no leading term");
  return terms_.front();
}

Integer Polynomial::degree() const {
  if (terms_.empty()) return Integer(-1);
  Integer d = terms_[0].mono.total_degree();
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::map<Monomial, Coeff, DescendingGrevlex> acc;
  for (const auto& t : terms_) acc[t.mono] = t.coeff;
  for (const auto& t : other.terms_) {
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(t.mono, t.coeff);
    else
      it->second = ring_->add(it->second, t.coeff);
  }
  Polynomial r(ring_);
  r.terms_ = from_accumulator(std::move(acc));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, ring_->neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::map<Monomial, Coeff, DescendingGrevlex> acc;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Monomial m = a.mono * b.mono;
      Coeff c = ring_->mul(a.coeff, b.coeff);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), c);
      else
        it->second = ring_->add(it->second, c);
    }
  }
  Polynomial r(ring_);
  r.terms_ = from_accumulator(std::move(acc));
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != other.terms_[i].coeff ||
        terms_[i].mono != other.terms_[i].mono)
      return false;
  return true;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mono, ring_->mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mono * m, ring_->mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), ring_->characteristic(), e);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // (sum c_i x^{m_i})^{p^e} = sum c_i^{p^e} x^{p^e m_i}, and c^{p^e} = c in F_p.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono.scaled(q), t.coeff});
  return r;
}

Polynomial Polynomial::pow(const Integer& n) const {
  if (n < 0) throw invalid_argument("negative polynomial exponent");
  if (n == 0) return constant(ring_, 1);
  const unsigned p = ring_->characteristic();
  // Base-p digits of n, least significant first.
  std::vector<unsigned> digits;
  Integer rest = n;
  while (rest > 0) {
    Integer q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p);
    digits.push_back(static_cast<unsigned>(r.get_ui()));
    rest = q;
  }
  Polynomial result = constant(ring_, 1);
  for (std::size_t i = digits.size(); i-- > 0;) {
    unsigned d = digits[i];
    Polynomial chunk = constant(ring_, 1);
    for (unsigned k = 0; k < d; ++k) chunk = chunk * (*this);
    if (i == digits.size() - 1) {
      result = chunk;
    } else {
      result = result.frobenius_power(1) * chunk;
    }
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->inv(leading_coeff()));
}

Integer Polynomial::filtration_valuation() const {
  if (terms_.empty()) return Integer(0);
  const std::size_t fi = ring_->filtration_index();
  Integer v = terms_[0].mono.e[fi];
  for (const auto& t : terms_) v = std::min(v, t.mono.e[fi]);
  return v;
}

Polynomial Polynomial::divide_by_filtration_power(const Integer& k) const {
  if (k == 0) return *this;
  const std::size_t fi = ring_->filtration_index();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.e[fi] < k)
      throw invalid_argument("inexact division by filtration power");
    Term nt{t.mono, t.coeff};
    nt.mono.e[fi] -= k;
    r.terms_.push_back(std::move(nt));
  }
  return r;
}

// --------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, RingHandle ring, Integer max_exp)
      : s_(text), ring_(std::move(ring)), max_exp_(std::move(max_exp)) {}

  Polynomial run() {
    Polynomial f = expression();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
    return f;
  }

 private:
  // expression := ['-'] term (('+' | '-') term)*
  Polynomial expression() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  // factor := base ('^' nat)?
  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      Integer n = natural();
      if (n > max_exp_)
        throw parse_error("exponent exceeds configured bound", pos_);
      b = b.pow(n);
    }
    return b;
  }

  // base := nat | identifier | '(' expression ')' | '-' factor
  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = natural();
      return Polynomial::constant(ring_, ring_->reduce(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      std::size_t idx = ring_->index_of(name);
      if (idx == RingSpec::npos)
        throw parse_error("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, idx);
    }
    throw parse_error(std::string("unexpected character '") +
                          (c ? std::string(1, c) : std::string("<end>")) + "'",
                      pos_);
  }

  Integer natural() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw parse_error("expected a number", pos_);
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  RingHandle ring_;
  Integer max_exp_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingHandle& ring,
                            const Integer& max_exponent) {
  return Parser(text, ring, max_exponent).run();
}

std::string to_string(const Monomial& m, const RingSpec& ring) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << ring.variables()[i];
    if (m.e[i] != 1) os << "^" << m.e[i].get_str();
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingSpec& ring = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    if (t.mono.is_one()) {
      os << t.coeff;
    } else if (t.coeff == 1) {
      os << to_string(t.mono, ring);
    } else {
      os << t.coeff << "*" << to_string(t.mono, ring);
    }
    first = false;
  }
  return os.str();
}

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial* b,
                      const Integer* exponent) {
  switch (op) {
    case ArithOp::add:
      if (!b) throw invalid_argument("add needs two operands");
      return a + *b;
    case ArithOp::sub:
      if (!b) throw invalid_argument("sub needs two operands");
      return a - *b;
    case ArithOp::mul:
      if (!b) throw invalid_argument("mul needs two operands");
      return a * *b;
    case ArithOp::pow:
      if (!exponent) throw invalid_argument("pow needs an exponent");
      return a.pow(*exponent);
  }
  throw invalid_argument("unknown arithmetic operation");
}

}  // namespace cartk
