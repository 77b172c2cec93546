// Private surgery support: crossings as pairs of directed strand passages,
// plus arc-label unification. Not installed.
#pragma once

#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace skein::detail {

struct Proto {
  int id = 0;
  CrossingKind kind = CrossingKind::positive;
  int s1_in = 0, s1_out = 0, s2_in = 0, s2_out = 0;
  bool flag = false;  // singular: second strand enters at slot 3
};

inline Proto to_proto(const Crossing& c) {
  Proto p;
  p.id = c.id;
  p.kind = c.kind;
  p.s1_in = c.ends[0];
  p.s1_out = c.ends[2];
  const bool in_at_e3 = c.incoming(3);
  p.s2_in = in_at_e3 ? c.ends[3] : c.ends[1];
  p.s2_out = in_at_e3 ? c.ends[1] : c.ends[3];
  p.flag = c.e3_in;
  return p;
}

inline Crossing from_proto(const Proto& p) {
  Crossing c;
  c.id = p.id;
  c.kind = p.kind;
  const bool in_at_e3 =
      p.kind == CrossingKind::positive || (p.kind == CrossingKind::singular && p.flag);
  c.ends = {p.s1_in, in_at_e3 ? p.s2_out : p.s2_in, p.s1_out, in_at_e3 ? p.s2_in : p.s2_out};
  c.e3_in = p.kind == CrossingKind::singular ? p.flag : (p.kind == CrossingKind::positive);
  return c;
}

struct ArcUnion {
  std::map<int, int> parent;
  int closed_loops = 0;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void join(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      ++closed_loops;  // an arc chain closed up into a crossingless circle
      return;
    }
    parent[ra] = rb;
  }
};

struct Assembly {
  std::vector<Proto> protos;
  ArcUnion arcs;
  int zero_comps = 0;
  int next_label = 1;
  int next_id = 0;

  explicit Assembly(const Diagram& d) {
    zero_comps = d.zero_crossing_components;
    for (const auto& c : d.crossings) {
      protos.push_back(to_proto(c));
      for (int e : c.ends) next_label = std::max(next_label, e + 1);
      next_id = std::max(next_id, c.id + 1);
    }
  }

  int fresh() { return next_label++; }

  Proto* by_id(int id) {
    for (auto& p : protos)
      if (p.id == id) return &p;
    return nullptr;
  }

  void remove_joining(int id) {
    auto* p = by_id(id);
    if (!p) throw SkeinError("pattern_mismatch", "no crossing to remove", std::to_string(id));
    arcs.join(p->s1_in, p->s1_out);
    arcs.join(p->s2_in, p->s2_out);
    remove_only(id);
  }

  void remove_only(int id) {
    protos.erase(std::remove_if(protos.begin(), protos.end(),
                                [id](const Proto& p) { return p.id == id; }),
                 protos.end());
  }

  /// Rename the label of the slot where `arc` enters its target crossing.
  bool rename_in_slot(int arc, int fresh_label) {
    for (auto& p : protos) {
      if (p.s1_in == arc) {
        p.s1_in = fresh_label;
        return true;
      }
      if (p.s2_in == arc) {
        p.s2_in = fresh_label;
        return true;
      }
    }
    return false;
  }

  void add_signed(int id, bool positive, int u_in, int u_out, int o_in, int o_out) {
    Proto p;
    p.id = id;
    p.kind = positive ? CrossingKind::positive : CrossingKind::negative;
    p.s1_in = u_in;
    p.s1_out = u_out;
    p.s2_in = o_in;
    p.s2_out = o_out;
    protos.push_back(p);
  }

  Diagram finish() {
    Diagram out;
    out.zero_crossing_components = zero_comps + arcs.closed_loops;
    for (auto& p : protos) {
      Proto q = p;
      q.s1_in = arcs.find(q.s1_in);
      q.s1_out = arcs.find(q.s1_out);
      q.s2_in = arcs.find(q.s2_in);
      q.s2_out = arcs.find(q.s2_out);
      out.crossings.push_back(from_proto(q));
    }
    std::sort(out.crossings.begin(), out.crossings.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return canonical_renumber(out);
  }
};

}  // namespace skein::detail
