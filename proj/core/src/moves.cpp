#include "skein/moves.hpp"

#include "skein/invariants.hpp"

#include "assembly.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace skein {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_add_pos: return "R1_add_pos";
    case MoveKind::r1_add_neg: return "R1_add_neg";
    case MoveKind::r1_remove: return "R1_remove";
    case MoveKind::r2_add: return "R2_add";
    case MoveKind::r2_remove: return "R2_remove";
    case MoveKind::r3: return "R3";
    case MoveKind::s_slide_over: return "S_slide_over";
    case MoveKind::s_slide_under: return "S_slide_under";
  }
  return "?";
}

MoveKind move_kind_from_name(const std::string& s) {
  for (MoveKind k : {MoveKind::r1_add_pos, MoveKind::r1_add_neg, MoveKind::r1_remove,
                     MoveKind::r2_add, MoveKind::r2_remove, MoveKind::r3,
                     MoveKind::s_slide_over, MoveKind::s_slide_under})
    if (move_kind_name(k) == s) return k;
  throw SkeinError("bad_move_kind", "unknown move kind", s);
}

std::string resolution_name(ResolutionSign s) {
  switch (s) {
    case ResolutionSign::plus: return "plus";
    case ResolutionSign::minus: return "minus";
    case ResolutionSign::zero: return "zero";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Surgeries are expressed on "passages" (see assembly.hpp): each crossing is
// two directed strand passages, with the counterclockwise ends tuple
// reconstructed afterwards. That keeps the move routines free of rotation
// bookkeeping.
using detail::Assembly;
using detail::Proto;
using detail::to_proto;

bool is_crossingless_ref(int v) { return v < 0; }

// role of the strand holding `arc` at the crossing it touches through `p`
bool over_at(const Diagram& d, Port p) {
  return p.pos == 1 || p.pos == 3;  // slots 1/3 carry the over strand when signed
}

}  // namespace

// ---- resolve / make_singular / crossing_change ----------------------------

Diagram resolve(const Diagram& d, DoublePointRef p, ResolutionSign s) {
  const int idx = d.index_of(p.crossing_id);
  if (idx < 0)
    throw SkeinError("no_such_crossing", "no crossing with id", std::to_string(p.crossing_id));
  const Crossing& c = d.crossings[idx];
  if (c.kind != CrossingKind::singular)
    throw SkeinError("not_singular", "resolution requires a singular crossing",
                     std::to_string(p.crossing_id));

  if (s == ResolutionSign::zero) {
    Assembly a(d);
    Proto pr = to_proto(c);
    a.remove_only(c.id);
    // oriented smoothing: initial of one branch to terminal of the other
    a.arcs.join(pr.s1_in, pr.s2_out);
    a.arcs.join(pr.s2_in, pr.s1_out);
    return a.finish();
  }

  Diagram out = d;
  Crossing& t = out.crossings[idx];
  const bool plus = s == ResolutionSign::plus;
  // choose which strand passes under so the crossing takes the wanted sign:
  // with the second strand running 3 -> 1, strand one underneath is positive
  if (plus && !t.e3_in) {
    t.ends = {t.ends[1], t.ends[2], t.ends[3], t.ends[0]};
  } else if (!plus && t.e3_in) {
    t.ends = {t.ends[3], t.ends[0], t.ends[1], t.ends[2]};
  }
  t.kind = plus ? CrossingKind::positive : CrossingKind::negative;
  t.e3_in = plus;
  return canonical_renumber(out);
}

Diagram make_singular(const Diagram& d, int crossing_id) {
  const int idx = d.index_of(crossing_id);
  if (idx < 0)
    throw SkeinError("no_such_crossing", "no crossing with id", std::to_string(crossing_id));
  if (d.crossings[idx].kind == CrossingKind::singular)
    throw SkeinError("already_singular", "crossing is already singular",
                     std::to_string(crossing_id));
  Diagram out = d;
  Crossing& c = out.crossings[idx];
  c.e3_in = c.kind == CrossingKind::positive;
  c.kind = CrossingKind::singular;
  return canonical_renumber(out);
}

std::pair<Diagram, Diagram> crossing_change(const Diagram& d, int crossing_id) {
  const int idx = d.index_of(crossing_id);
  if (idx < 0)
    throw SkeinError("no_such_crossing", "no crossing with id", std::to_string(crossing_id));
  const Crossing& c = d.crossings[idx];
  if (c.kind == CrossingKind::singular)
    throw SkeinError("not_signed", "cannot switch a singular crossing",
                     std::to_string(crossing_id));
  Diagram out = d;
  Crossing& t = out.crossings[idx];
  if (t.kind == CrossingKind::positive) {
    t.ends = {t.ends[3], t.ends[0], t.ends[1], t.ends[2]};
    t.kind = CrossingKind::negative;
  } else {
    t.ends = {t.ends[1], t.ends[2], t.ends[3], t.ends[0]};
    t.kind = CrossingKind::positive;
  }
  t.e3_in = t.kind == CrossingKind::positive;
  return {canonical_renumber(out), make_singular(d, crossing_id)};
}

// ---- move application ------------------------------------------------------

namespace {

Diagram apply_r1_add(const Diagram& d, bool positive, const MoveSite& site) {
  if (site.location.size() != 2)
    throw SkeinError("pattern_mismatch", "R1_add location must be [arc, variant]");
  const int target = site.location[0];
  const int variant = site.location[1];
  Assembly a(d);
  const int id = a.next_id;
  if (is_crossingless_ref(target)) {
    const int k = -1 - target;
    if (k >= a.zero_comps)
      throw SkeinError("pattern_mismatch", "no such crossingless component", std::to_string(k));
    a.zero_comps--;
    const int x = a.fresh(), l = a.fresh();
    a.add_signed(id, positive, x, l, l, x);
    return a.finish();
  }
  CombMap m(d);
  if (!m.has_arc(target))
    throw SkeinError("pattern_mismatch", "no such arc", std::to_string(target));
  const int tail = a.fresh(), loop = a.fresh();
  if (!a.rename_in_slot(target, tail))
    throw SkeinError("pattern_mismatch", "arc has no target slot", std::to_string(target));
  if (variant == 0) {
    // first passage under: ... a -(under)-> loop -(over)-> tail ...
    a.add_signed(id, positive, target, loop, loop, tail);
  } else {
    a.add_signed(id, positive, loop, tail, target, loop);
  }
  return a.finish();
}

Diagram apply_r1_remove(const Diagram& d, const MoveSite& site) {
  if (site.location.size() != 2)
    throw SkeinError("pattern_mismatch", "R1_remove location must be [crossing, i]");
  const int idx = d.index_of(site.location[0]);
  const int i = site.location[1];
  if (idx < 0 || i < 0 || i > 3)
    throw SkeinError("pattern_mismatch", "bad R1_remove location");
  const Crossing& c = d.crossings[idx];
  if (!c.is_signed() || c.ends[i] != c.ends[(i + 1) % 4])
    throw SkeinError("pattern_mismatch", "no curl at this crossing");
  Assembly a(d);
  a.remove_joining(c.id);
  return a.finish();
}

struct PortRef {
  bool crossingless = false;
  int zero_index = 0;  // when crossingless
  Port port;           // otherwise
};

PortRef decode_port(const Diagram& d, int id_or_ref, int pos) {
  PortRef r;
  if (is_crossingless_ref(id_or_ref)) {
    r.crossingless = true;
    r.zero_index = -1 - id_or_ref;
    if (r.zero_index >= d.zero_crossing_components)
      throw SkeinError("pattern_mismatch", "no such crossingless component",
                       std::to_string(r.zero_index));
    return r;
  }
  const int ci = d.index_of(id_or_ref);
  if (ci < 0 || pos < 0 || pos > 3)
    throw SkeinError("pattern_mismatch", "bad port reference");
  r.port = {ci, pos};
  return r;
}

Diagram apply_r2_add(const Diagram& d, const MoveSite& site) {
  if (site.location.size() != 4)
    throw SkeinError("pattern_mismatch", "R2_add location must be [cA,posA,cB,posB]");
  PortRef mover = decode_port(d, site.location[0], site.location[1]);
  PortRef stat = decode_port(d, site.location[2], site.location[3]);

  Assembly a(d);
  const int idE = a.next_id, idX = a.next_id + 1;

  if (mover.crossingless && stat.crossingless) {
    if (mover.zero_index == stat.zero_index) {
      // a floating circle poked over itself
      a.zero_comps -= 1;
      const int p = a.fresh(), q = a.fresh(), r = a.fresh(), s = a.fresh();
      a.add_signed(idE, false, s, p, p, q);
      a.add_signed(idX, true, r, s, q, r);
      return a.finish();
    }
    a.zero_comps -= 2;
    const int x = a.fresh(), m2 = a.fresh();
    const int y = a.fresh(), t2 = a.fresh();
    // antiparallel by convention for unoriented floaters
    a.add_signed(idE, false, t2, y, x, m2);
    a.add_signed(idX, true, y, t2, m2, x);
    return a.finish();
  }

  CombMap m(d);
  int marc = 0, tarc = 0;
  if (!mover.crossingless && !stat.crossingless) {
    marc = m.arc_at(mover.port);
    tarc = m.arc_at(stat.port);
    if (marc == tarc)
      throw SkeinError("pattern_mismatch", "R2_add needs two distinct arcs");
    // the two sides must border a common face
    bool shared = false;
    for (const auto& f : m.faces()) {
      bool hasm = false, hast = false;
      for (const Port& p : f) {
        if (p == mover.port) hasm = true;
        if (p == stat.port) hast = true;
      }
      if (hasm && hast) {
        shared = true;
        break;
      }
    }
    if (!shared) throw SkeinError("pattern_mismatch", "ports do not share a face");
  } else if (mover.crossingless) {
    tarc = m.arc_at(stat.port);
  } else {
    marc = m.arc_at(mover.port);
  }

  int m1, m2, m3, t1, t2, t3;
  if (mover.crossingless) {
    a.zero_comps -= 1;
    m1 = m3 = a.fresh();
    m2 = a.fresh();
  } else {
    m1 = marc;
    m2 = a.fresh();
    m3 = a.fresh();
    a.rename_in_slot(marc, m3);
  }
  if (stat.crossingless) {
    a.zero_comps -= 1;
    t1 = t3 = a.fresh();
    t2 = a.fresh();
  } else {
    t1 = tarc;
    t2 = a.fresh();
    t3 = a.fresh();
    a.rename_in_slot(tarc, t3);
  }

  // Four local pictures, keyed by how the face walk runs along each arc
  // (out-port: walk goes with the arc). They fix the relative orientation of
  // the two strands and which side the mover approaches from; a floating
  // circle has a free orientation and takes the against-walk convention.
  const int dir_m = (mover.crossingless || m.incoming(mover.port)) ? -1 : +1;
  const int dir_t = (stat.crossingless || m.incoming(stat.port)) ? -1 : +1;
  const bool t_parallel = dir_m != dir_t;  // stationary split order t1|E|t2|X|t3
  // the mover enters from the stationary arc's face side; that side alone
  // fixes the entering crossing's sign
  const bool e_positive = dir_t == -1;

  if (t_parallel) {
    a.add_signed(idE, e_positive, t1, t2, m1, m2);
    a.add_signed(idX, !e_positive, t2, t3, m2, m3);
  } else {
    a.add_signed(idE, e_positive, t2, t3, m1, m2);
    a.add_signed(idX, !e_positive, t1, t2, m2, m3);
  }
  return a.finish();
}

// trace the face orbit that starts at `p` (by phi = sigma(alpha(.)))
std::vector<Port> face_from(const CombMap& m, Port p) {
  std::vector<Port> face;
  Port q = p;
  do {
    face.push_back(q);
    q = m.sigma(m.alpha(q));
  } while (!(q == p));
  return face;
}

std::vector<Port> decode_face(const Diagram& d, const CombMap& m, const MoveSite& site,
                              size_t nports) {
  if (site.location.size() != 2 * nports)
    throw SkeinError("pattern_mismatch", "bad face location size");
  std::vector<Port> ports;
  for (size_t i = 0; i < nports; ++i) {
    PortRef r = decode_port(d, site.location[2 * i], site.location[2 * i + 1]);
    if (r.crossingless) throw SkeinError("pattern_mismatch", "face ports cannot be crossingless");
    ports.push_back(r.port);
  }
  std::vector<Port> face = face_from(m, ports[0]);
  if (face.size() != nports) throw SkeinError("pattern_mismatch", "face size differs");
  for (size_t i = 0; i < nports; ++i)
    if (!(face[i] == ports[i % nports]))
      throw SkeinError("pattern_mismatch", "ports are not a face orbit");
  return ports;
}

Diagram apply_r2_remove(const Diagram& d, const MoveSite& site) {
  CombMap m(d);
  auto ports = decode_face(d, m, site, 2);
  const Port P = ports[0], Q = ports[1];
  const Crossing& c1 = d.crossings[P.ci];
  const Crossing& c2 = d.crossings[Q.ci];
  if (P.ci == Q.ci || !c1.is_signed() || !c2.is_signed())
    throw SkeinError("pattern_mismatch", "R2_remove needs a bigon between two signed crossings");
  const int u = m.arc_at(P), v = m.arc_at(Q);
  if (u == v) throw SkeinError("pattern_mismatch", "degenerate bigon");
  // one strand of the bigon must be over at both crossings
  const bool u_over_p = over_at(d, P);
  Port u_other = m.alpha(P);
  if (!(u_other.ci == Q.ci))
    throw SkeinError("pattern_mismatch", "bigon arcs do not connect the two crossings");
  const bool u_over_q = over_at(d, u_other);
  if (u_over_p != u_over_q) throw SkeinError("pattern_mismatch", "clasp bigon, not an R2 pair");
  Assembly a(d);
  a.remove_joining(c1.id);
  a.remove_joining(c2.id);
  return a.finish();
}

// triangle-side bookkeeping shared by R3 and the rigid-vertex slides:
// for arc `side` joining crossings X and Y, swap the (in,out) pairs of the
// strand's passage at X with its passage at Y.
void swap_side_passages(Assembly& a, const CombMap& m, int side) {
  Port pin = m.in_port(side), pout = m.out_port(side);
  Proto* cx = a.by_id(m.diagram().crossings[pin.ci].id);
  Proto* cy = a.by_id(m.diagram().crossings[pout.ci].id);
  // swap full (in,out) pairs of the two passages of this strand
  auto passage_of = [side](Proto* p, bool want_in) -> std::pair<int*, int*> {
    if ((want_in && p->s1_in == side) || (!want_in && p->s1_out == side))
      return {&p->s1_in, &p->s1_out};
    if ((want_in && p->s2_in == side) || (!want_in && p->s2_out == side))
      return {&p->s2_in, &p->s2_out};
    throw SkeinError("pattern_mismatch", "triangle side not found in passage");
  };
  auto [xin, xout] = passage_of(cx, true);   // side enters at crossing cx
  auto [yin, yout] = passage_of(cy, false);  // side leaves crossing cy
  std::swap(*xin, *yin);
  std::swap(*xout, *yout);
}

Diagram apply_r3(const Diagram& d, const MoveSite& site) {
  CombMap m(d);
  auto ports = decode_face(d, m, site, 3);
  std::set<int> cis;
  for (const Port& p : ports) cis.insert(p.ci);
  if (cis.size() != 3) throw SkeinError("pattern_mismatch", "R3 needs three distinct crossings");
  for (int ci : cis)
    if (!d.crossings[ci].is_signed())
      throw SkeinError("pattern_mismatch", "R3 face touches a singular crossing");
  std::set<int> sides;
  for (const Port& p : ports) sides.insert(m.arc_at(p));
  if (sides.size() != 3) throw SkeinError("pattern_mismatch", "degenerate triangle");
  // coherence: some side runs over (or under) at both of its crossings
  bool coherent = false;
  for (int s : sides) {
    const bool o1 = over_at(d, m.in_port(s));
    const bool o2 = over_at(d, m.out_port(s));
    if (o1 == o2) coherent = true;
  }
  if (!coherent) throw SkeinError("pattern_mismatch", "cyclic triangle admits no R3");
  // every passage of the triangle crossings must touch exactly one side
  for (int ci : cis) {
    const Proto p = to_proto(d.crossings[ci]);
    const int t1 = static_cast<int>(sides.count(p.s1_in)) + static_cast<int>(sides.count(p.s1_out));
    const int t2 = static_cast<int>(sides.count(p.s2_in)) + static_cast<int>(sides.count(p.s2_out));
    if (t1 != 1 || t2 != 1)
      throw SkeinError("pattern_mismatch", "degenerate triangle passage");
  }
  Assembly a(d);
  for (int s : sides) swap_side_passages(a, m, s);
  return a.finish();
}

// A rigid-vertex slide is the R3 passage swap with the singular crossing in
// the middle: the sliding strand's crossings reattach to the opposite ends
// of the vertex, all signs preserved.
Diagram apply_s_slide(const Diagram& d, const MoveSite& site, bool over) {
  CombMap m(d);
  auto ports = decode_face(d, m, site, 3);
  std::set<int> cis;
  for (const Port& p : ports) cis.insert(p.ci);
  if (cis.size() != 3) throw SkeinError("pattern_mismatch", "slide needs three distinct crossings");
  int sing_ci = -1;
  for (int ci : cis)
    if (d.crossings[ci].kind == CrossingKind::singular) {
      if (sing_ci >= 0) throw SkeinError("pattern_mismatch", "two singular crossings on the face");
      sing_ci = ci;
    }
  if (sing_ci < 0) throw SkeinError("pattern_mismatch", "no singular crossing on this face");

  std::set<int> sides;
  for (const Port& p : ports) sides.insert(m.arc_at(p));
  if (sides.size() != 3) throw SkeinError("pattern_mismatch", "degenerate slide triangle");

  std::vector<int> legs;
  int xmid = -1;
  for (int arc : sides) {
    const bool at_sing = m.in_port(arc).ci == sing_ci || m.out_port(arc).ci == sing_ci;
    if (at_sing)
      legs.push_back(arc);
    else
      xmid = arc;
  }
  if (legs.size() != 2 || xmid < 0)
    throw SkeinError("pattern_mismatch", "slide face must have two legs at the vertex");

  // the sliding strand runs over (or under) at both leg crossings
  for (int leg : legs) {
    const Port far = m.in_port(leg).ci == sing_ci ? m.out_port(leg) : m.in_port(leg);
    if (far.ci == sing_ci || !d.crossings[far.ci].is_signed())
      throw SkeinError("pattern_mismatch", "slide legs must reach signed crossings");
    const bool x_over = !over_at(d, far);  // leg under <=> x over
    if (x_over != over)
      throw SkeinError("pattern_mismatch", over ? "strand does not pass over the vertex"
                                                : "strand does not pass under the vertex");
  }
  // every passage of the three crossings must touch exactly one side
  for (int ci : cis) {
    const Proto p = to_proto(d.crossings[ci]);
    const int t1 = static_cast<int>(sides.count(p.s1_in)) + static_cast<int>(sides.count(p.s1_out));
    const int t2 = static_cast<int>(sides.count(p.s2_in)) + static_cast<int>(sides.count(p.s2_out));
    if (t1 != 1 || t2 != 1) throw SkeinError("pattern_mismatch", "degenerate slide passage");
  }
  Assembly a(d);
  for (int s : sides) swap_side_passages(a, m, s);
  return a.finish();
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::r1_add_pos: return apply_r1_add(d, true, site);
    case MoveKind::r1_add_neg: return apply_r1_add(d, false, site);
    case MoveKind::r1_remove: return apply_r1_remove(d, site);
    case MoveKind::r2_add: return apply_r2_add(d, site);
    case MoveKind::r2_remove: return apply_r2_remove(d, site);
    case MoveKind::r3: return apply_r3(d, site);
    case MoveKind::s_slide_over: return apply_s_slide(d, site, true);
    case MoveKind::s_slide_under: return apply_s_slide(d, site, false);
  }
  throw SkeinError("bad_move_kind", "unhandled move kind");
}

// ---- site enumeration ------------------------------------------------------

std::vector<MoveSite> enumerate_move_sites(const Diagram& d) {
  std::vector<MoveSite> sites;
  const CombMap m(d);

  // R1 additions: every arc both ways, both curl variants
  std::set<int> arcs;
  for (const auto& c : d.crossings)
    for (int e : c.ends) arcs.insert(e);
  for (MoveKind k : {MoveKind::r1_add_pos, MoveKind::r1_add_neg}) {
    for (int a : arcs)
      for (int v : {0, 1}) sites.push_back({k, {a, v}});
    for (int z = 0; z < d.zero_crossing_components; ++z) sites.push_back({k, {-1 - z, 0}});
  }

  // R1 removals: adjacent equal ends on a signed crossing. The surgery does
  // not depend on which adjacent pair witnesses the curl, so list one site
  // per crossing.
  for (const auto& c : d.crossings) {
    if (!c.is_signed()) continue;
    for (int i = 0; i < 4; ++i)
      if (c.ends[i] == c.ends[(i + 1) % 4]) {
        sites.push_back({MoveKind::r1_remove, {c.id, i}});
        break;
      }
  }

  const auto fs = m.faces();
  auto loc_of = [&](const std::vector<Port>& ps) {
    std::vector<int> loc;
    for (const Port& p : ps) {
      loc.push_back(d.crossings[p.ci].id);
      loc.push_back(p.pos);
    }
    return loc;
  };

  // R2 additions between distinct arcs of one face
  for (const auto& f : fs)
    for (const Port& p : f)
      for (const Port& q : f) {
        if (p == q || m.arc_at(p) == m.arc_at(q)) continue;
        sites.push_back({MoveKind::r2_add, loc_of({p, q})});
      }
  // R2 additions involving crossingless components
  for (int z = 0; z < d.zero_crossing_components; ++z) {
    for (const auto& f : fs)
      for (const Port& p : f) {
        sites.push_back({MoveKind::r2_add, {-1 - z, -1, d.crossings[p.ci].id, p.pos}});
        sites.push_back({MoveKind::r2_add, {d.crossings[p.ci].id, p.pos, -1 - z, -1}});
      }
    for (int w = 0; w < d.zero_crossing_components; ++w)
      sites.push_back({MoveKind::r2_add, {-1 - z, -1, -1 - w, -1}});
  }

  // R2 removals: bigons with a coherent over strand
  for (const auto& f : fs) {
    if (f.size() != 2) continue;
    const Port P = f[0], Q = f[1];
    if (P.ci == Q.ci) continue;
    if (!d.crossings[P.ci].is_signed() || !d.crossings[Q.ci].is_signed()) continue;
    const int u = m.arc_at(P), v = m.arc_at(Q);
    if (u == v) continue;
    Port u_other = m.alpha(P);
    if (u_other.ci != Q.ci) continue;
    if (over_at(d, P) != over_at(d, u_other)) continue;
    sites.push_back({MoveKind::r2_remove, loc_of({P, Q})});
  }

  // triangles: R3 away from singular crossings, slides at a rigid vertex
  for (const auto& f : fs) {
    if (f.size() != 3) continue;
    std::set<int> cis, sidearcs;
    int nsing = 0;
    for (const Port& p : f) {
      cis.insert(p.ci);
      sidearcs.insert(m.arc_at(p));
      if (d.crossings[p.ci].kind == CrossingKind::singular) ++nsing;
    }
    if (cis.size() != 3 || sidearcs.size() != 3) continue;
    if (nsing == 0) {
      bool coherent = false;
      bool degenerate = false;
      for (int s : sidearcs)
        if (over_at(d, m.in_port(s)) == over_at(d, m.out_port(s))) coherent = true;
      for (int ci : cis) {
        const Proto p = to_proto(d.crossings[ci]);
        if (static_cast<int>(sidearcs.count(p.s1_in)) + static_cast<int>(sidearcs.count(p.s1_out)) != 1 ||
            static_cast<int>(sidearcs.count(p.s2_in)) + static_cast<int>(sidearcs.count(p.s2_out)) != 1)
          degenerate = true;
      }
      if (coherent && !degenerate) sites.push_back({MoveKind::r3, loc_of(f)});
    } else if (nsing == 1) {
      // classify leg arcs vs sliding strand, check role coherence
      int sing_ci = -1;
      for (const Port& p : f)
        if (d.crossings[p.ci].kind == CrossingKind::singular) sing_ci = p.ci;
      std::vector<int> legs;
      int xmid = -1;
      bool bad = false;
      for (int arc : sidearcs) {
        const bool at_sing = m.in_port(arc).ci == sing_ci || m.out_port(arc).ci == sing_ci;
        if (at_sing)
          legs.push_back(arc);
        else
          xmid = arc;
      }
      if (legs.size() != 2 || xmid < 0) continue;
      std::vector<bool> roles;
      for (int leg : legs) {
        const Port far = m.in_port(leg).ci == sing_ci ? m.out_port(leg) : m.in_port(leg);
        if (far.ci == sing_ci || !d.crossings[far.ci].is_signed()) {
          bad = true;
          break;
        }
        roles.push_back(!over_at(d, far));  // x over iff leg under
      }
      if (bad || roles.size() != 2 || roles[0] != roles[1]) continue;
      // legs must land on two distinct crossings
      const Port f0 = m.in_port(legs[0]).ci == sing_ci ? m.out_port(legs[0]) : m.in_port(legs[0]);
      const Port f1 = m.in_port(legs[1]).ci == sing_ci ? m.out_port(legs[1]) : m.in_port(legs[1]);
      if (f0.ci == f1.ci) continue;
      bool degenerate = false;
      for (int ci : cis) {
        const Proto p = to_proto(d.crossings[ci]);
        if (static_cast<int>(sidearcs.count(p.s1_in)) + static_cast<int>(sidearcs.count(p.s1_out)) != 1 ||
            static_cast<int>(sidearcs.count(p.s2_in)) + static_cast<int>(sidearcs.count(p.s2_out)) != 1)
          degenerate = true;
      }
      if (degenerate) continue;
      sites.push_back({roles[0] ? MoveKind::s_slide_over : MoveKind::s_slide_under, loc_of(f)});
    }
  }

  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<MoveSite> enumerate_reducing_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (const auto& s : enumerate_move_sites(d))
    if (s.kind == MoveKind::r1_remove || s.kind == MoveKind::r2_remove || s.kind == MoveKind::r3 ||
        s.kind == MoveKind::s_slide_over || s.kind == MoveKind::s_slide_under)
      out.push_back(s);
  return out;
}

MoveSite inverse_site(const Diagram& before, const MoveSite& site, const Diagram& after) {
  MoveKind want;
  switch (site.kind) {
    case MoveKind::r1_add_pos:
    case MoveKind::r1_add_neg: want = MoveKind::r1_remove; break;
    case MoveKind::r1_remove: {
      const Crossing& c = before.crossing_by_id(site.location[0]);
      want = c.kind == CrossingKind::positive ? MoveKind::r1_add_pos : MoveKind::r1_add_neg;
      break;
    }
    case MoveKind::r2_add: want = MoveKind::r2_remove; break;
    case MoveKind::r2_remove: want = MoveKind::r2_add; break;
    case MoveKind::r3: want = MoveKind::r3; break;
    case MoveKind::s_slide_over: want = MoveKind::s_slide_over; break;
    case MoveKind::s_slide_under: want = MoveKind::s_slide_under; break;
    default: throw SkeinError("bad_move_kind", "unhandled move kind");
  }
  const std::string target = serialize(canonical_renumber(before));
  for (const auto& cand : enumerate_move_sites(after)) {
    if (cand.kind != want) continue;
    try {
      if (serialize(apply_move(after, cand)) == target) return cand;
    } catch (const SkeinError&) {
    }
  }
  throw SkeinError("no_inverse", "no move undoes this site", move_kind_name(site.kind));
}

// ---- searches ---------------------------------------------------------------

namespace {

struct SearchNode {
  Diagram d;
  int parent = -1;
  MoveSite via;
};

// deterministic frontier expansion, parallel over nodes when it pays off
std::vector<std::vector<std::pair<MoveSite, Diagram>>> expand_all(
    const std::vector<const Diagram*>& frontier) {
  auto expand = [](const Diagram* d) {
    std::vector<std::pair<MoveSite, Diagram>> out;
    for (const auto& s : enumerate_reducing_sites(*d)) out.push_back({s, apply_move(*d, s)});
    return out;
  };
  std::vector<std::vector<std::pair<MoveSite, Diagram>>> result(frontier.size());
  if (frontier.size() < 8) {
    for (size_t i = 0; i < frontier.size(); ++i) result[i] = expand(frontier[i]);
    return result;
  }
  std::vector<std::future<std::vector<std::pair<MoveSite, Diagram>>>> futs;
  futs.reserve(frontier.size());
  for (const Diagram* d : frontier)
    futs.push_back(std::async(std::launch::async, expand, d));
  for (size_t i = 0; i < frontier.size(); ++i) result[i] = futs[i].get();
  return result;
}

}  // namespace

SimplifyResult simplify(const Diagram& d, int budget) {
  const Diagram start = canonical_renumber(d);
  std::vector<SearchNode> nodes;
  nodes.push_back({start, -1, {}});
  std::map<std::string, int> seen;
  seen[serialize(start)] = 0;

  int best = 0;
  auto better = [&](const Diagram& a, const Diagram& b) {
    if (a.crossings.size() != b.crossings.size()) return a.crossings.size() < b.crossings.size();
    return serialize(a) < serialize(b);
  };

  std::deque<int> queue{0};
  int visited = 0;
  while (!queue.empty() && visited < budget) {
    std::vector<int> level;
    while (!queue.empty() && visited + static_cast<int>(level.size()) < budget) {
      level.push_back(queue.front());
      queue.pop_front();
    }
    visited += static_cast<int>(level.size());
    std::vector<const Diagram*> ds;
    for (int i : level) ds.push_back(&nodes[i].d);
    auto expanded = expand_all(ds);
    for (size_t k = 0; k < level.size(); ++k) {
      for (auto& [site, child] : expanded[k]) {
        std::string key = serialize(child);
        if (seen.count(key)) continue;
        const int id = static_cast<int>(nodes.size());
        seen[key] = id;
        nodes.push_back({std::move(child), level[k], site});
        if (better(nodes[id].d, nodes[best].d)) best = id;
        queue.push_back(id);
      }
    }
  }

  SimplifyResult r;
  r.visited = visited;
  r.diagram = nodes[best].d;
  for (int i = best; i > 0; i = nodes[i].parent) r.witness.push_back(nodes[i].via);
  std::reverse(r.witness.begin(), r.witness.end());
  return r;
}

Verdict is_kink(const Diagram& d, DoublePointRef p, int budget) {
  const int idx = d.index_of(p.crossing_id);
  if (idx < 0 || d.crossings[idx].kind != CrossingKind::singular)
    throw SkeinError("not_singular", "is_kink needs a singular crossing",
                     std::to_string(p.crossing_id));

  auto syntactic = [](const Diagram& dia, int id) {
    const int i = dia.index_of(id);
    if (i < 0) return false;
    const Crossing& c = dia.crossings[i];
    if (c.kind != CrossingKind::singular) return false;
    for (int k = 0; k < 4; ++k)
      if (c.ends[k] == c.ends[(k + 1) % 4]) return true;
    return false;
  };

  const Diagram start = canonical_renumber(d);
  if (syntactic(start, p.crossing_id)) return Verdict::yes;

  // separation certificate: a kink's two resolutions are equivalent
  try {
    if (planarity_genus(start) == 0) {
      RingElem jp = jones_A(resolve(start, p, ResolutionSign::plus));
      RingElem jm = jones_A(resolve(start, p, ResolutionSign::minus));
      if (jp != jm) return Verdict::no;
    }
  } catch (const SkeinError&) {
    // crossing cap or genus: fall through to the search
  }

  std::deque<Diagram> queue{start};
  std::set<std::string> seen{serialize(start)};
  int visited = 0;
  while (!queue.empty() && visited < budget) {
    Diagram cur = std::move(queue.front());
    queue.pop_front();
    ++visited;
    for (const auto& site : enumerate_reducing_sites(cur)) {
      Diagram child = apply_move(cur, site);
      if (!seen.insert(serialize(child)).second) continue;
      if (syntactic(child, p.crossing_id)) return Verdict::yes;
      queue.push_back(child);
    }
  }
  return Verdict::unknown;
}

namespace {

// multiset of Jones values over the 2^k full resolutions, when computable
std::optional<std::multiset<std::string>> resolution_jones(const Diagram& d) {
  if (planarity_genus(d) != 0 || d.crossings.size() > 12) return std::nullopt;
  std::vector<int> sing;
  for (const auto& c : d.crossings)
    if (c.kind == CrossingKind::singular) sing.push_back(c.id);
  if (sing.size() > 4) return std::nullopt;
  std::multiset<std::string> out;
  const size_t n = sing.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    Diagram cur = d;
    for (size_t i = 0; i < n; ++i)
      cur = resolve(cur, {sing[i]},
                    ((mask >> i) & 1) ? ResolutionSign::plus : ResolutionSign::minus);
    out.insert(jones_A(cur).str());
  }
  return out;
}

}  // namespace

EquivResult equivalent(const Diagram& d1, const Diagram& d2, int budget) {
  const Diagram a = canonical_renumber(d1), b = canonical_renumber(d2);
  if (serialize(a) == serialize(b)) return {Verdict::yes, "identical", {}};
  if (iso_canonical_string(a) == iso_canonical_string(b)) return {Verdict::yes, "isomorphic", {}};

  if (a.order() != b.order()) return {Verdict::no, "invariant:order", {}};
  if (count_components(a) != count_components(b)) return {Verdict::no, "invariant:components", {}};
  if (planarity_genus(a) != planarity_genus(b)) return {Verdict::no, "invariant:genus", {}};
  auto ja = resolution_jones(a), jb = resolution_jones(b);
  if (ja && jb && *ja != *jb) return {Verdict::no, "invariant:jones", {}};

  // bounded bidirectional search over the non-increasing move set
  struct Side {
    std::vector<SearchNode> nodes;
    std::map<std::string, int> seen;
    std::deque<int> queue;
  };
  Side s1, s2;
  auto init = [](Side& s, const Diagram& d) {
    s.nodes.push_back({d, -1, {}});
    s.seen[serialize(d)] = 0;
    s.queue.push_back(0);
  };
  init(s1, a);
  init(s2, b);

  auto path_from = [](const Side& s, int i) {
    std::vector<std::pair<Diagram, MoveSite>> steps;  // (resulting diagram, move)
    for (int k = i; k > 0; k = s.nodes[k].parent) steps.push_back({s.nodes[k].d, s.nodes[k].via});
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  int visited = 0;
  while ((!s1.queue.empty() || !s2.queue.empty()) && visited < budget) {
    for (Side* side : {&s1, &s2}) {
      if (side->queue.empty() || visited >= budget) continue;
      Side& other = side == &s1 ? s2 : s1;
      const int cur = side->queue.front();
      side->queue.pop_front();
      ++visited;
      for (const auto& site : enumerate_reducing_sites(side->nodes[cur].d)) {
        Diagram child = apply_move(side->nodes[cur].d, site);
        std::string key = serialize(child);
        if (side->seen.count(key)) continue;
        const int id = static_cast<int>(side->nodes.size());
        side->seen[key] = id;
        side->nodes.push_back({std::move(child), cur, site});
        side->queue.push_back(id);
        auto hit = other.seen.find(key);
        if (hit == other.seen.end()) continue;
        // assemble the forward witness d1 -> meeting -> d2
        EquivResult r{Verdict::yes, "search", {}};
        const bool via1 = side == &s1;
        auto fwd = path_from(via1 ? s1 : s2, via1 ? id : hit->second);
        auto back = path_from(via1 ? s2 : s1, via1 ? hit->second : id);
        for (auto& [dd, mv] : fwd) r.witness.push_back(mv);
        // invert the second half, walking back from the meeting diagram
        Diagram at = via1 ? s1.nodes[id].d : s1.nodes[hit->second].d;
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          const Diagram& prev = (it + 1) == back.rend() ? (via1 ? s2 : s1).nodes[0].d
                                                        : (it + 1)->first;
          MoveSite inv = inverse_site(prev, it->second, it->first);
          r.witness.push_back(inv);
          at = apply_move(at, inv);
        }
        return r;
      }
    }
  }
  return {Verdict::unknown, "budget", {}};
}

}  // namespace skein
