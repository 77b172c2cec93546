#pragma once

#include "skein/diagram.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace skein {

enum class MoveKind {
  r1_add_pos,
  r1_add_neg,
  r1_remove,
  r2_add,
  r2_remove,
  r3,
  s_slide_over,
  s_slide_under,
};

std::string move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& s);

/// A move together with the data pinning its local pattern.
///
/// Location encodings (all ids refer to the diagram the move applies to):
///  - r1_add_pos / r1_add_neg: [arc, variant] with variant in {0,1} selecting
///    the curl side; a crossingless component k is addressed as arc -1-k.
///  - r1_remove: [crossing id, i] where ends[i] == ends[(i+1)%4].
///  - r2_add: [cA, posA, cB, posB]; the first port's arc slides over the
///    second port's arc through their shared face. Crossingless components
///    are addressed as [-1-k, -1].
///  - r2_remove: [c1, pos1, c2, pos2], the two ports of the bigon face.
///  - r3: the three ports of the triangle face, [c1,p1,c2,p2,c3,p3].
///  - s_slide_over / s_slide_under: the three ports of the corner face at the
///    singular crossing, same layout as r3.
struct MoveSite {
  MoveKind kind;
  std::vector<int> location;
  bool operator==(const MoveSite& o) const { return kind == o.kind && location == o.location; }
  bool operator<(const MoveSite& o) const {
    if (kind != o.kind) return kind < o.kind;
    return location < o.location;
  }
};

enum class ResolutionSign { plus, minus, zero };

std::string resolution_name(ResolutionSign s);

enum class Verdict { yes, no, unknown };

std::string verdict_name(Verdict v);

/// Replace the singular crossing at `p` by a positive crossing, a negative
/// crossing, or the oriented smoothing. The result is canonically renumbered;
/// for plus/minus the order drops by one, for zero components may merge or
/// split.
Diagram resolve(const Diagram& d, DoublePointRef p, ResolutionSign s);

/// Turn the signed crossing `c` into a rigid double point. Exact inverse of
/// resolve with the original sign.
Diagram make_singular(const Diagram& d, int crossing_id);

/// Switch the crossing and also return the intermediate order-1 diagram the
/// switch passes through.
std::pair<Diagram, Diagram> crossing_change(const Diagram& d, int crossing_id);

/// Every applicable move site, sorted by kind then location.
std::vector<MoveSite> enumerate_move_sites(const Diagram& d);

/// Apply one move. Throws SkeinError("pattern_mismatch") if the site does not
/// match. The result is canonically renumbered; untouched crossing ids are
/// preserved and new crossings take fresh ids.
Diagram apply_move(const Diagram& d, const MoveSite& site);

/// The site that undoes `site` on apply_move(d, site). Found by matching
/// candidate inverse sites against `d` exactly.
MoveSite inverse_site(const Diagram& before, const MoveSite& site, const Diagram& after);

struct SimplifyResult {
  Diagram diagram;
  std::vector<MoveSite> witness;  // replayable from the input diagram
  int visited = 0;
};

/// Breadth-first search over crossing-count-non-increasing moves
/// (R1/R2 removals, R3, singular slides), bounded by `budget` visited nodes.
/// Returns the best diagram found: fewest crossings, ties broken by canonical
/// serialization. Deterministic given budget.
SimplifyResult simplify(const Diagram& d, int budget);

/// Is the double point `p` a kink (its two ends joined by an empty loop)?
/// Searches as simplify does; answers `no` when the two resolutions are
/// separated by the Jones invariant, `unknown` when the budget runs out.
Verdict is_kink(const Diagram& d, DoublePointRef p, int budget);

struct EquivResult {
  Verdict verdict = Verdict::unknown;
  std::string method;   // "identical" | "isomorphic" | "search" | "invariant:<name>" | "budget"
  std::vector<MoveSite> witness;  // forward move path d1 -> d2 when found by search
};

/// Bounded bidirectional search for move-equivalence, with invariant-based
/// separation (component count, order, genus, Jones values of the full
/// resolutions).
EquivResult equivalent(const Diagram& d1, const Diagram& d2, int budget);

/// Move-set used by the searches above, exposed for tests: all sites of
/// non-increasing kinds.
std::vector<MoveSite> enumerate_reducing_sites(const Diagram& d);

}  // namespace skein
