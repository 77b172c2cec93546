#include <doctest.h>

#include "skein/ring.hpp"
#include "skein/rng.hpp"
#include "skein/serde.hpp"

using namespace skein;

TEST_CASE("ring basics") {
  const RingElem a2 = RingElem::monomial(2);
  CHECK((a2 + (-a2)).is_zero());
  CHECK((RingElem::from_int(7) + RingElem::from_int(-7)).is_zero());

  // (A^-1 + A) * A = 1 + A^2
  const RingElem lhs = (RingElem::monomial(-1) + RingElem::monomial(1)) * RingElem::monomial(1);
  CHECK(lhs == RingElem::from_int(1) + RingElem::monomial(2));
  CHECK(lhs.str() == "A^2+1");
}

TEST_CASE("no zero terms are stored") {
  RingElem r = RingElem::monomial(3, 5);
  r += RingElem::monomial(3, -5);
  CHECK(r.terms().empty());
  CHECK(r.str() == "0");
}

namespace {
RingElem random_elem(Rng& rng) {
  RingElem r;
  const int terms = 1 + static_cast<int>(rng.pick(4));
  for (int i = 0; i < terms; ++i) {
    const int exp = static_cast<int>(rng.pick(21)) - 10;
    const long c = static_cast<long>(rng.pick(9)) - 4;
    r += RingElem::monomial(exp, c);
  }
  return r;
}
}  // namespace

TEST_CASE("ring laws on random elements") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const RingElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("ring json round trip") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const RingElem a = random_elem(rng);
    CHECK(ring_from_json(ring_to_json(a)) == a);
  }
  // big coefficients survive the decimal-string form
  RingElem big = RingElem::monomial(0, mpz_class("123456789012345678901234567890"));
  CHECK(ring_from_json(ring_to_json(big)) == big);
}
