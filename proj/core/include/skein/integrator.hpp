#pragma once

#include "skein/diagram.hpp"
#include "skein/invariants.hpp"
#include "skein/moves.hpp"
#include "skein/serde.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace skein {

/// One discrete step of a homotopy: either an isotopy move or a crossing
/// change. Change events are the only steps that alter link type.
struct PathEvent {
  enum class Type { move, change };
  Type type = Type::move;
  MoveSite site;                                   // move events
  int crossing = 0;                                // change events
  CrossingKind to = CrossingKind::positive;        // resulting sign
};

/// A start diagram plus an ordered event list; the discrete form of a
/// homotopy. Replaying from the start yields a valid diagram after every
/// prefix.
struct HomotopyPath {
  Diagram start;
  std::vector<PathEvent> events;
};

/// Sign convention. The paper direction for a path running from L' (start)
/// to L (end) is F(L') = F(L) + sum_i eps_i f(phi_i). The sign that makes
/// this telescope for derived invariants is eps = +1 exactly when the event
/// switches a positive crossing away (the start side of the event is the
/// positive resolution); equivalently eps = -1 when the resulting sign is
/// positive.
struct SingularEvent {
  Diagram diagram;  // the intermediate order-1 singular diagram
  int epsilon = 0;
  int crossing = 0;
  int event_index = 0;
};

struct ReplayResult {
  Diagram end;
  std::vector<SingularEvent> singular_events;
};

ReplayResult replay(const HomotopyPath& path);

/// base + sum eps_i f(event_i). With base = F(end of path) this returns
/// F(start) for f derived from F.
RingElem evaluate_path(const SingularInvariant& f, const HomotopyPath& path,
                       const RingElem& base);

/// The loop defect X: the signed f-sum around a closed path. Throws
/// SkeinError("loop_not_closed") if the replay does not end at the start.
RingElem loop_defect(const SingularInvariant& f, const HomotopyPath& loop);

/// Kink loop: add a random curl, switch it, remove it. Closes exactly; its
/// single singular event is a certified kink.
HomotopyPath gen_loop_kink(const Diagram& start, std::uint64_t seed);

/// Commutator loop on two signed crossings: switch c1, c2, then switch both
/// back. Its four singular events are the four one-point resolutions of the
/// order-2 diagram singularized at {c1, c2}.
HomotopyPath gen_loop_commutator(const Diagram& start, int c1, int c2);

/// Switch crossings so every first visit runs over (basepoints chosen to
/// minimize the number of switches), then append the simplification witness;
/// the path ends at the crossingless unlink.
HomotopyPath descending_path(const Diagram& d, int simplify_budget = 20000);

/// F(d) = base[components(d)] + signed f-sum along a descending path.
RingElem integrate(const SingularInvariant& f, const Diagram& d,
                   const std::map<int, RingElem>& base, int simplify_budget = 20000);

struct PathIndependenceReport {
  int paths = 0;
  std::vector<RingElem> values;
  bool all_equal = true;
  std::uint64_t seed = 0;
};

/// k distinct unlink-reaching paths (descending plus randomized variants);
/// asserts all integrated values agree.
PathIndependenceReport path_independence_report(const SingularInvariant& f, const Diagram& d,
                                                int k, std::uint64_t seed);

HomotopyPath reverse_path(const HomotopyPath& path);
HomotopyPath concat_paths(const HomotopyPath& a, const HomotopyPath& b);
/// gamma . loop . gamma^-1, a loop based at gamma's start.
HomotopyPath conjugate_loop(const HomotopyPath& gamma, const HomotopyPath& loop);

Json path_to_json(const HomotopyPath& p);
HomotopyPath path_from_json(const Json& j);

}  // namespace skein
