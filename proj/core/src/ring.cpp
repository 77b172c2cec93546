#include "skein/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

RingElem RingElem::from_int(long v) { return monomial(0, mpz_class(v)); }

RingElem RingElem::from_int(const mpz_class& v) { return monomial(0, v); }

RingElem RingElem::monomial(int exp, mpz_class coeff) {
  RingElem r;
  if (coeff != 0) r.terms_[exp] = std::move(coeff);
  return r;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void RingElem::add_term(int exp, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RingElem RingElem::operator+(const RingElem& o) const {
  RingElem r = *this;
  r += o;
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
  RingElem r = *this;
  r -= o;
  return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
  RingElem r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

mpz_class RingElem::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int RingElem::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int RingElem::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

std::string RingElem::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first reads like a polynomial
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = c;
    if (a < 0) {
      os << "-";
      a = -a;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace skein
