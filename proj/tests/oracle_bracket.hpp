// Independent brute-force Kauffman bracket used as a cross-check oracle.
// Deliberately a different implementation path from the library: loops of a
// smoothing state are counted by walking half-edges around the diagram, not
// by union-find over arc labels.
#pragma once

#include "skein/invariants.hpp"

#include <map>
#include <set>

namespace oracle {

inline skein::RingElem bracket_bruteforce(const skein::Diagram& d) {
  using skein::RingElem;
  const int n = static_cast<int>(d.crossings.size());
  const RingElem delta = skein::bracket_delta();

  // half-edges: (crossing index, position); the smoothing of each crossing
  // links its four positions in two pairs, and arcs link crossings
  struct HalfEdge {
    int ci;
    int pos;
    bool operator<(const HalfEdge& o) const {
      return ci != o.ci ? ci < o.ci : pos < o.pos;
    }
    bool operator==(const HalfEdge& o) const { return ci == o.ci && pos == o.pos; }
  };
  // other end of the arc at a given slot
  std::map<int, std::vector<HalfEdge>> by_arc;
  for (int ci = 0; ci < n; ++ci)
    for (int pos = 0; pos < 4; ++pos) by_arc[d.crossings[ci].ends[pos]].push_back({ci, pos});
  auto across_arc = [&](HalfEdge h) {
    const auto& v = by_arc.at(d.crossings[h.ci].ends[h.pos]);
    return v[0] == h ? v[1] : v[0];
  };

  RingElem total;
  for (long state = 0; state < (1L << n); ++state) {
    auto partner = [&](HalfEdge h) -> HalfEdge {
      const bool a_type = ((state >> h.ci) & 1) == 0;
      // A joins 0-1 and 2-3; B joins 0-3 and 1-2
      static const int a_map[4] = {1, 0, 3, 2};
      static const int b_map[4] = {3, 2, 1, 0};
      return {h.ci, a_type ? a_map[h.pos] : b_map[h.pos]};
    };
    int loops = 0;
    std::set<HalfEdge> seen;
    for (int ci = 0; ci < n; ++ci)
      for (int pos = 0; pos < 4; ++pos) {
        HalfEdge start{ci, pos};
        if (seen.count(start)) continue;
        ++loops;
        HalfEdge h = start;
        do {
          seen.insert(h);
          HalfEdge p = partner(h);
          seen.insert(p);
          h = across_arc(p);
        } while (!(h == start));
      }

    int a_count = 0;
    for (int ci = 0; ci < n; ++ci)
      if (((state >> ci) & 1) == 0) ++a_count;
    RingElem term = RingElem::monomial(2 * a_count - n);
    for (int i = 0; i < loops + d.zero_crossing_components - 1; ++i) term = term * delta;
    total += term;
  }
  if (n == 0) {
    total = RingElem::from_int(1);
    for (int i = 0; i < d.zero_crossing_components - 1; ++i) total = total * delta;
  }
  return total;
}

}  // namespace oracle
