#include <doctest.h>

#include "oracle_bracket.hpp"
#include "skein/invariants.hpp"
#include "skein/moves.hpp"
#include "skein/rng.hpp"
#include "skein/table.hpp"

using namespace skein;

namespace {
RingElem A(int exp, long c = 1) { return RingElem::monomial(exp, c); }
}

TEST_CASE("bracket normalization") {
  CHECK(kauffman_bracket(unknot()) == RingElem::from_int(1));
  CHECK(kauffman_bracket(unlink(2)) == bracket_delta());
  // one delta per extra crossingless component
  CHECK(kauffman_bracket(unlink(3)) == bracket_delta() * bracket_delta());
}

TEST_CASE("bracket throws past the crossing cap") {
  CHECK_THROWS_AS(kauffman_bracket(trefoil_left(), 2), SkeinError);
}

TEST_CASE("bracket matches the brute-force oracle on the table") {
  for (const auto& [name, d] : knot_table()) {
    CAPTURE(name);
    CHECK(kauffman_bracket(d) == oracle::bracket_bruteforce(d));
  }
  CHECK(kauffman_bracket(hopf_positive()) == oracle::bracket_bruteforce(hopf_positive()));
  CHECK(kauffman_bracket(whitehead()) == oracle::bracket_bruteforce(whitehead()));
}

TEST_CASE("bracket satisfies its defining local relation") {
  // <d> = A <d_A> + A^-1 <d_B> at every crossing, smoothings built explicitly
  for (const Diagram& d : {trefoil_left(), figure_eight(), hopf_positive(), whitehead()}) {
    for (const auto& c : d.crossings) {
      const Diagram da = smooth_crossing(d, c.id, true);
      const Diagram db = smooth_crossing(d, c.id, false);
      CHECK(validate(da).ok);
      CHECK(validate(db).ok);
      CHECK(kauffman_bracket(d) ==
            A(1) * kauffman_bracket(da) + A(-1) * kauffman_bracket(db));
    }
  }
}

TEST_CASE("jones normalization and frozen values") {
  CHECK(jones_A(unknot()) == RingElem::from_int(1));
  // R1 invariance: a curl does not change the value
  const Diagram curl = apply_move(unknot(), {MoveKind::r1_add_pos, {-1, 0}});
  CHECK(jones_A(curl) == RingElem::from_int(1));

  // V(left trefoil) = -t^-4 + t^-3 + t^-1 at t = A^-4
  CHECK(jones_A(trefoil_left()) == A(16, -1) + A(12) + A(4));
  // figure-eight: t^-2 - t^-1 + 1 - t + t^2
  CHECK(jones_A(figure_eight()) == A(8) - A(4) + A(0) - A(-4) + A(-8));
  // positive Hopf link in A: -A^-2 - A^-10
  CHECK(jones_A(hopf_positive()) == A(-2, -1) + A(-10, -1));
  CHECK(unlink_jones(2) == bracket_delta());
}

TEST_CASE("jones separates mirrors and stays invariant under moves") {
  CHECK(jones_A(trefoil_left()) != RingElem::from_int(1));
  CHECK(jones_A(trefoil_left()) != jones_A(mirror(trefoil_left())));
  // figure-eight is amphichiral; its diagram mirror has the same value
  CHECK(jones_A(figure_eight()) == jones_A(mirror(figure_eight())));

  Rng rng(101);
  for (const Diagram& d : {trefoil_left(), hopf_positive(), figure_eight()}) {
    Diagram cur = canonical_renumber(d);
    const RingElem v = jones_A(cur);
    for (int i = 0; i < 10; ++i) {
      std::vector<MoveSite> usable;
      for (const auto& s : enumerate_move_sites(cur)) {
        int delta = s.kind == MoveKind::r2_add                                         ? 2
                    : (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) ? 1
                                                                                         : 0;
        if (static_cast<int>(cur.crossings.size()) + delta <= 11) usable.push_back(s);
      }
      cur = apply_move(cur, usable[rng.pick(usable.size())]);
      CHECK(jones_A(cur) == v);
    }
  }
}

TEST_CASE("v2 by gauss count matches the skein oracle on the whole table") {
  for (const auto& [name, d] : knot_table()) {
    CAPTURE(name);
    CHECK(v2_gauss(d) == v2_skein_oracle(d));
  }
}

TEST_CASE("v2 frozen values") {
  CHECK(v2_gauss(unknot()) == 0);
  CHECK(v2_skein_oracle(unknot()) == 0);
  CHECK(v2_skein_oracle(trefoil_left()) == 1);
  CHECK(v2_gauss(trefoil_left()) == 1);
  CHECK(v2_gauss(mirror(trefoil_left())) == 1);  // v2 is mirror-invariant
  CHECK(v2_gauss(figure_eight()) == -1);
  CHECK(v2_gauss(torus_5_1()) == 3);
  CHECK(v2_gauss(knot_5_2()) == 2);
  CHECK(v2_gauss(braid_closure(2, {1, 1, 1, 1, 1, 1, 1})) == 6);  // (2,7) torus knot
}

TEST_CASE("conway a2 is additive under connected sum") {
  const Diagram granny = connected_sum(trefoil_left(), trefoil_left());
  CHECK(v2_skein_oracle(granny) == 2);
  const Diagram mixed = connected_sum(trefoil_left(), figure_eight());
  CHECK(v2_skein_oracle(mixed) == 0);
  CHECK(v2_gauss(mixed) == 0);
}

TEST_CASE("conway polynomial values") {
  // nabla(trefoil) = z^2 + 1, nabla(fig8) = 1 - z^2, nabla(5_1) = z^4+3z^2+1
  CHECK(conway_polynomial(trefoil_left()) == A(2) + A(0));
  CHECK(conway_polynomial(figure_eight()) == A(0) - A(2));
  CHECK(conway_polynomial(torus_5_1()) == A(4) + A(2, 3) + A(0));
  CHECK(conway_polynomial(whitehead()).is_zero() == false);
  // split links vanish
  CHECK(conway_polynomial(unlink(2)).is_zero());
}

TEST_CASE("derived singular invariants") {
  const auto d_jones = *singular_invariant("d_jones");
  // on a kink the two resolutions are equivalent, so the derivative vanishes
  Diagram curl = apply_move(unknot(), {MoveKind::r1_add_pos, {-1, 0}});
  const Diagram kink = make_singular(curl, curl.max_crossing_id());
  CHECK(d_jones.eval(kink).is_zero());

  // on the singularized trefoil it is jones(switched trefoil) - jones(trefoil)
  const Diagram st = make_singular(trefoil_left(), 0);
  const RingElem expect = jones_A(resolve(st, {0}, ResolutionSign::plus)) -
                          jones_A(resolve(st, {0}, ResolutionSign::minus));
  CHECK(d_jones.eval(st) == expect);
  CHECK_FALSE(d_jones.eval(st).is_zero());

  // all three singularizations of one trefoil agree (well-definedness)
  const RingElem v0 = d_jones.eval(make_singular(trefoil_left(), 0));
  const RingElem v1 = d_jones.eval(make_singular(trefoil_left(), 1));
  const RingElem v2v = d_jones.eval(make_singular(trefoil_left(), 2));
  CHECK(v0 == v1);
  CHECK(v1 == v2v);

  const auto d_const = *singular_invariant("d_const1");
  CHECK(d_const.eval(st).is_zero());
  CHECK(d_const.eval(kink).is_zero());

  const auto jonesplus = *singular_invariant("jonesplus");
  CHECK(jonesplus.eval(kink) == RingElem::from_int(1));
}

TEST_CASE("derived invariants are preserved by singular slide moves") {
  const auto d_jones = *singular_invariant("d_jones");
  const Diagram st = make_singular(trefoil_left(), 0);
  const RingElem v = d_jones.eval(st);
  int tested = 0;
  for (const auto& poke : enumerate_move_sites(st)) {
    if (poke.kind != MoveKind::r2_add) continue;
    const Diagram fat = apply_move(st, poke);
    CHECK(d_jones.eval(fat) == v);
    for (const auto& s : enumerate_move_sites(fat)) {
      if (s.kind != MoveKind::s_slide_over && s.kind != MoveKind::s_slide_under) continue;
      CHECK(d_jones.eval(apply_move(fat, s)) == v);
      ++tested;
    }
    if (tested >= 4) break;
  }
  CHECK(tested > 0);
}

TEST_CASE("smoothing helper reorients consistently") {
  // B-smoothing of a negative self-crossing needs a component reversal
  for (const auto& [name, d] : knot_table()) {
    CAPTURE(name);
    for (const auto& c : d.crossings) {
      CHECK(validate(smooth_crossing(d, c.id, true)).ok);
      CHECK(validate(smooth_crossing(d, c.id, false)).ok);
    }
  }
}

TEST_CASE("v2x0 is move-invariant on knot diagrams") {
  const auto F = *link_invariant("v2x0");
  Rng rng(314);
  Diagram cur = canonical_renumber(figure_eight());
  const RingElem v = F.eval(cur);
  for (int i = 0; i < 8; ++i) {
    std::vector<MoveSite> usable;
    for (const auto& s : enumerate_move_sites(cur)) {
      int delta = s.kind == MoveKind::r2_add                                         ? 2
                  : (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) ? 1
                                                                                       : 0;
      if (static_cast<int>(cur.crossings.size()) + delta <= 10) usable.push_back(s);
    }
    cur = apply_move(cur, usable[rng.pick(usable.size())]);
    CHECK(F.eval(cur) == v);
  }
}
