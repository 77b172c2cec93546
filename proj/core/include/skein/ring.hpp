#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace skein {

/// Exact Laurent polynomial in one formal variable, with arbitrary-precision
/// integer coefficients. Canonical form: no zero coefficient is ever stored,
/// so structural equality of the term maps is ring equality.
class RingElem {
public:
  RingElem() = default;

  static RingElem from_int(long v);
  static RingElem from_int(const mpz_class& v);
  /// coeff * X^exp
  static RingElem monomial(int exp, mpz_class coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);

  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return terms_ != o.terms_; }

  /// Coefficient of X^exp (zero if absent).
  mpz_class coeff(int exp) const;
  int min_exp() const;  // throws on zero
  int max_exp() const;  // throws on zero

  const std::map<int, mpz_class>& terms() const { return terms_; }

  /// Human-readable form such as "-A^-2-A^-10" or "0".
  std::string str(const std::string& var = "A") const;

private:
  std::map<int, mpz_class> terms_;
  void add_term(int exp, const mpz_class& c);
};

}  // namespace skein
