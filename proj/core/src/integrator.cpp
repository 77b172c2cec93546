#include "skein/integrator.hpp"

#include "skein/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skein {

ReplayResult replay(const HomotopyPath& path) {
  Diagram cur = canonical_renumber(path.start);
  ReplayResult r;
  int idx = 0;
  for (const auto& ev : path.events) {
    if (ev.type == PathEvent::Type::move) {
      cur = apply_move(cur, ev.site);
    } else {
      const int ci = cur.index_of(ev.crossing);
      if (ci < 0)
        throw SkeinError("no_such_crossing", "change references a missing crossing",
                         std::to_string(ev.crossing));
      const Crossing& c = cur.crossings[ci];
      if (c.kind == CrossingKind::singular)
        throw SkeinError("not_signed", "cannot change a singular crossing",
                         std::to_string(ev.crossing));
      if (c.kind == ev.to)
        throw SkeinError("change_no_op", "change event does not change the sign",
                         std::to_string(ev.crossing));
      // eps = +1 when the start side of the event is the positive resolution
      const int eps = c.kind == CrossingKind::positive ? 1 : -1;
      auto [flipped, intermediate] = crossing_change(cur, ev.crossing);
      r.singular_events.push_back({std::move(intermediate), eps, ev.crossing, idx});
      cur = std::move(flipped);
    }
    ++idx;
  }
  r.end = std::move(cur);
  return r;
}

RingElem evaluate_path(const SingularInvariant& f, const HomotopyPath& path,
                       const RingElem& base) {
  ReplayResult r = replay(path);
  RingElem acc = base;
  for (const auto& ev : r.singular_events) {
    RingElem v = f.eval(ev.diagram);
    acc += ev.epsilon > 0 ? v : -v;
  }
  return acc;
}

RingElem loop_defect(const SingularInvariant& f, const HomotopyPath& loop) {
  ReplayResult r = replay(loop);
  const std::string s0 = serialize(canonical_renumber(loop.start));
  if (serialize(r.end) != s0)
    throw SkeinError("loop_not_closed", "path does not return to its start diagram");
  RingElem acc;
  for (const auto& ev : r.singular_events) {
    RingElem v = f.eval(ev.diagram);
    acc += ev.epsilon > 0 ? v : -v;
  }
  return acc;
}

HomotopyPath gen_loop_kink(const Diagram& start0, std::uint64_t seed) {
  Diagram start = canonical_renumber(start0);
  require_link(start);
  Rng rng(seed);
  std::vector<MoveSite> curls;
  for (const auto& s : enumerate_move_sites(start))
    if (s.kind == MoveKind::r1_add_pos) curls.push_back(s);
  if (curls.empty()) throw SkeinError("internal", "no curl site available");
  const MoveSite add = curls[rng.pick(curls.size())];
  Diagram curled = apply_move(start, add);
  const int cid = curled.max_crossing_id();
  Diagram changed = crossing_change(curled, cid).first;
  MoveSite remove{MoveKind::r1_remove, {}};
  for (const auto& s : enumerate_move_sites(changed))
    if (s.kind == MoveKind::r1_remove && s.location[0] == cid) {
      remove = s;
      break;
    }
  if (remove.location.empty()) throw SkeinError("internal", "changed curl is not removable");
  Diagram end = apply_move(changed, remove);
  if (serialize(end) != serialize(start))
    throw SkeinError("internal", "kink loop failed to close");
  HomotopyPath p;
  p.start = start;
  p.events.push_back({PathEvent::Type::move, add, 0, CrossingKind::positive});
  p.events.push_back({PathEvent::Type::change, {}, cid, CrossingKind::negative});
  p.events.push_back({PathEvent::Type::move, remove, 0, CrossingKind::positive});
  return p;
}

HomotopyPath gen_loop_commutator(const Diagram& start0, int c1, int c2) {
  Diagram start = canonical_renumber(start0);
  require_link(start);
  if (c1 == c2) throw SkeinError("bad_argument", "commutator needs two distinct crossings");
  auto flip = [](CrossingKind k) {
    return k == CrossingKind::positive ? CrossingKind::negative : CrossingKind::positive;
  };
  const CrossingKind s1 = start.crossing_by_id(c1).kind;
  const CrossingKind s2 = start.crossing_by_id(c2).kind;
  if (s1 == CrossingKind::singular || s2 == CrossingKind::singular)
    throw SkeinError("not_signed", "commutator crossings must be signed");
  HomotopyPath p;
  p.start = start;
  p.events.push_back({PathEvent::Type::change, {}, c1, flip(s1)});
  p.events.push_back({PathEvent::Type::change, {}, c2, flip(s2)});
  p.events.push_back({PathEvent::Type::change, {}, c1, s1});
  p.events.push_back({PathEvent::Type::change, {}, c2, s2});
  return p;
}

namespace {

struct Traversal {
  std::vector<int> switch_ids;  // in first-encounter order
};

Traversal traversal_switches(const Diagram& d, const CombMap& m,
                             const std::vector<std::vector<int>>& orbits,
                             const std::vector<int>& order, const std::vector<int>& starts) {
  Traversal t;
  std::set<int> seen;
  for (size_t k = 0; k < order.size(); ++k) {
    const auto& orbit = orbits[order[k]];
    const int n = static_cast<int>(orbit.size());
    for (int s = 0; s < n; ++s) {
      const int arc = orbit[(starts[k] + s) % n];
      Port p = m.in_port(arc);
      const Crossing& c = d.crossings[p.ci];
      if (seen.insert(c.id).second) {
        const bool over = p.pos == 1 || p.pos == 3;
        if (!over) t.switch_ids.push_back(c.id);
      }
    }
  }
  return t;
}

}  // namespace

HomotopyPath descending_path(const Diagram& d0, int simplify_budget) {
  Diagram d = canonical_renumber(d0);
  require_link(d);
  HomotopyPath path;
  path.start = d;
  if (d.crossings.empty()) return path;

  CombMap m(d);
  const auto orbits = m.orbits();
  const size_t mc = orbits.size();

  // search basepoints and component order for the fewest switches
  std::vector<int> order(mc);
  std::iota(order.begin(), order.end(), 0);
  size_t combos = 1;
  for (const auto& o : orbits) combos *= o.size();
  size_t fact = 1;
  for (size_t i = 2; i <= mc; ++i) fact *= i;

  std::vector<int> best_switches;
  bool have_best = false;
  if (mc <= 4 && combos * fact <= 100000) {
    std::vector<int> ord = order;
    do {
      std::vector<int> starts(mc, 0);
      while (true) {
        Traversal t = traversal_switches(d, m, orbits, ord, starts);
        if (!have_best || t.switch_ids.size() < best_switches.size()) {
          best_switches = t.switch_ids;
          have_best = true;
        }
        size_t i = 0;
        for (; i < mc; ++i) {
          if (++starts[i] < static_cast<int>(orbits[ord[i]].size())) break;
          starts[i] = 0;
        }
        if (i == mc) break;
      }
    } while (std::next_permutation(ord.begin(), ord.end()));
  } else {
    best_switches = traversal_switches(d, m, orbits, order, std::vector<int>(mc, 0)).switch_ids;
  }

  Diagram cur = d;
  auto flip = [](CrossingKind k) {
    return k == CrossingKind::positive ? CrossingKind::negative : CrossingKind::positive;
  };
  for (int id : best_switches) {
    path.events.push_back({PathEvent::Type::change, {}, id, flip(cur.crossing_by_id(id).kind)});
    cur = crossing_change(cur, id).first;
  }

  SimplifyResult sr = simplify(cur, simplify_budget);
  if (!sr.diagram.crossings.empty())
    throw SkeinError("simplify_budget",
                     "descending diagram did not reduce to the crossingless unlink",
                     "remaining crossings: " + std::to_string(sr.diagram.crossings.size()));
  for (const auto& mv : sr.witness)
    path.events.push_back({PathEvent::Type::move, mv, 0, CrossingKind::positive});
  return path;
}

RingElem integrate(const SingularInvariant& f, const Diagram& d,
                   const std::map<int, RingElem>& base, int simplify_budget) {
  const int mc = count_components(d);
  auto it = base.find(mc);
  if (it == base.end())
    throw SkeinError("missing_base", "no integration constant for this component count",
                     std::to_string(mc));
  HomotopyPath path = descending_path(d, simplify_budget);
  return evaluate_path(f, path, it->second);
}

namespace {

// random move events (isotopy only), mirroring the corpus walk filter
std::pair<std::vector<PathEvent>, Diagram> random_move_events(const Diagram& d, Rng& rng,
                                                              int steps, int max_crossings) {
  std::vector<PathEvent> events;
  Diagram cur = d;
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveSite> usable;
    const int n = static_cast<int>(cur.crossings.size());
    for (const auto& s : enumerate_move_sites(cur)) {
      int delta = 0;
      switch (s.kind) {
        case MoveKind::r1_add_pos:
        case MoveKind::r1_add_neg: delta = 1; break;
        case MoveKind::r2_add: delta = 2; break;
        case MoveKind::r1_remove: delta = -1; break;
        case MoveKind::r2_remove: delta = -2; break;
        default: delta = 0; break;
      }
      if (n + delta <= max_crossings) usable.push_back(s);
    }
    if (usable.empty()) break;
    const MoveSite site = usable[rng.pick(usable.size())];
    events.push_back({PathEvent::Type::move, site, 0, CrossingKind::positive});
    cur = apply_move(cur, site);
  }
  return {std::move(events), std::move(cur)};
}

}  // namespace

PathIndependenceReport path_independence_report(const SingularInvariant& f, const Diagram& d0,
                                                int k, std::uint64_t seed) {
  if (k < 2) throw SkeinError("bad_argument", "path independence needs k >= 2");
  Diagram d = canonical_renumber(d0);
  require_link(d);
  PathIndependenceReport rep;
  rep.paths = k;
  rep.seed = seed;
  Rng rng(seed);

  const HomotopyPath base_path = descending_path(d);
  for (int i = 0; i < k; ++i) {
    HomotopyPath path;
    if (i == 0) {
      path = base_path;
    } else if (rng.coin()) {
      // pre-walk by random moves, then descend from the walked diagram
      auto [walk_events, walked] =
          random_move_events(d, rng, 1 + static_cast<int>(rng.pick(3)),
                             static_cast<int>(d.crossings.size()) + 4);
      HomotopyPath tail = descending_path(walked);
      path.start = d;
      path.events = walk_events;
      path.events.insert(path.events.end(), tail.events.begin(), tail.events.end());
    } else {
      // permuted change order; the final switched diagram is the same, so the
      // recorded reduction witness still applies
      path = base_path;
      std::vector<size_t> change_ix;
      for (size_t e = 0; e < path.events.size(); ++e)
        if (path.events[e].type == PathEvent::Type::change) change_ix.push_back(e);
      std::vector<PathEvent> changes;
      for (size_t ix : change_ix) changes.push_back(path.events[ix]);
      for (size_t a = changes.size(); a > 1; --a)
        std::swap(changes[a - 1], changes[rng.pick(a)]);
      for (size_t j = 0; j < change_ix.size(); ++j) path.events[change_ix[j]] = changes[j];
    }
    ReplayResult rr = replay(path);
    if (!rr.end.crossings.empty())
      throw SkeinError("path_not_certified", "path did not reach the crossingless unlink");
    rep.values.push_back(evaluate_path(f, path, RingElem()));
  }
  for (const auto& v : rep.values)
    if (v != rep.values.front()) rep.all_equal = false;
  return rep;
}

HomotopyPath reverse_path(const HomotopyPath& path) {
  // collect intermediate diagrams to invert each event in place
  std::vector<Diagram> states;
  states.push_back(canonical_renumber(path.start));
  for (const auto& ev : path.events) {
    const Diagram& cur = states.back();
    if (ev.type == PathEvent::Type::move)
      states.push_back(apply_move(cur, ev.site));
    else
      states.push_back(crossing_change(cur, ev.crossing).first);
  }
  HomotopyPath rev;
  rev.start = states.back();
  for (int i = static_cast<int>(path.events.size()) - 1; i >= 0; --i) {
    const PathEvent& ev = path.events[i];
    if (ev.type == PathEvent::Type::move) {
      MoveSite inv = inverse_site(states[i], ev.site, states[i + 1]);
      rev.events.push_back({PathEvent::Type::move, inv, 0, CrossingKind::positive});
    } else {
      const CrossingKind original = states[i].crossing_by_id(ev.crossing).kind;
      rev.events.push_back({PathEvent::Type::change, {}, ev.crossing, original});
    }
  }
  return rev;
}

HomotopyPath concat_paths(const HomotopyPath& a, const HomotopyPath& b) {
  const Diagram end_a = replay(a).end;
  if (serialize(end_a) != serialize(canonical_renumber(b.start)))
    throw SkeinError("bad_argument", "paths do not compose: end of first differs from start of second");
  HomotopyPath out;
  out.start = canonical_renumber(a.start);
  out.events = a.events;
  out.events.insert(out.events.end(), b.events.begin(), b.events.end());
  return out;
}

HomotopyPath conjugate_loop(const HomotopyPath& gamma, const HomotopyPath& loop) {
  return concat_paths(concat_paths(gamma, loop), reverse_path(gamma));
}

Json path_to_json(const HomotopyPath& p) {
  Json j;
  j["start"] = diagram_to_json(p.start);
  Json events = Json::array();
  for (const auto& ev : p.events) {
    Json ej;
    if (ev.type == PathEvent::Type::move) {
      ej["type"] = "move";
      ej["kind"] = move_kind_name(ev.site.kind);
      ej["location"] = ev.site.location;
    } else {
      ej["type"] = "change";
      ej["crossing"] = ev.crossing;
      ej["to"] = kind_name(ev.to);
    }
    events.push_back(std::move(ej));
  }
  j["events"] = std::move(events);
  return j;
}

HomotopyPath path_from_json(const Json& j) {
  HomotopyPath p;
  p.start = parse_pd(j.at("start").dump());
  for (const auto& ej : j.at("events")) {
    PathEvent ev;
    const std::string type = ej.at("type").get<std::string>();
    if (type == "move") {
      ev.type = PathEvent::Type::move;
      ev.site.kind = move_kind_from_name(ej.at("kind").get<std::string>());
      ev.site.location = ej.at("location").get<std::vector<int>>();
    } else if (type == "change") {
      ev.type = PathEvent::Type::change;
      ev.crossing = ej.at("crossing").get<int>();
      ev.to = kind_from_name(ej.at("to").get<std::string>());
    } else {
      throw SkeinError("bad_field", "unknown path event type", type);
    }
    p.events.push_back(std::move(ev));
  }
  return p;
}

}  // namespace skein
