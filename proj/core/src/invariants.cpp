#include "skein/invariants.hpp"

#include "skein/moves.hpp"

#include "assembly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skein {

RingElem bracket_delta() {
  return RingElem::monomial(2, -1) + RingElem::monomial(-2, -1);
}

namespace {

RingElem delta_power(int k) {
  RingElem r = RingElem::from_int(1);
  const RingElem d = bracket_delta();
  for (int i = 0; i < k; ++i) r = r * d;
  return r;
}

struct FlatUnion {
  std::vector<int> parent;
  explicit FlatUnion(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RingElem kauffman_bracket(const Diagram& d, int crossing_cap) {
  require_link(d);
  if (static_cast<int>(d.crossings.size()) > crossing_cap)
    throw SkeinError("crossing_cap", "state sum too large",
                     std::to_string(d.crossings.size()) + " > " + std::to_string(crossing_cap));
  if (!d.crossings.empty() && planarity_genus(d) != 0)
    throw SkeinError("nonzero_genus", "bracket needs a planar diagram");

  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) {
    const int loops = d.zero_crossing_components;
    return loops <= 1 ? RingElem::from_int(1) : delta_power(loops - 1);
  }

  // dense arc indexing for the union-find
  std::map<int, int> arc_ix;
  for (const auto& c : d.crossings)
    for (int e : c.ends)
      if (!arc_ix.count(e)) arc_ix.emplace(e, static_cast<int>(arc_ix.size()));

  RingElem total;
  for (size_t state = 0; state < (size_t{1} << n); ++state) {
    FlatUnion uf(static_cast<int>(arc_ix.size()));
    int a_count = 0;
    for (int i = 0; i < n; ++i) {
      const auto& e = d.crossings[i].ends;
      const bool a_type = ((state >> i) & 1) == 0;
      if (a_type) {
        ++a_count;
        uf.join(arc_ix[e[0]], arc_ix[e[1]]);
        uf.join(arc_ix[e[2]], arc_ix[e[3]]);
      } else {
        uf.join(arc_ix[e[0]], arc_ix[e[3]]);
        uf.join(arc_ix[e[1]], arc_ix[e[2]]);
      }
    }
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(arc_ix.size()); ++i) roots.insert(uf.find(i));
    const int loops = static_cast<int>(roots.size()) + d.zero_crossing_components;
    const int exp = a_count - (n - a_count);
    total += RingElem::monomial(exp) * delta_power(loops - 1);
  }
  return total;
}

RingElem jones_A(const Diagram& d, int crossing_cap) {
  const int w = writhe(d);
  const RingElem norm = RingElem::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return norm * kauffman_bracket(d, crossing_cap);
}

RingElem unlink_jones(int m) {
  if (m < 1) throw SkeinError("bad_argument", "unlink needs at least one component");
  return delta_power(m - 1);
}

// ---- v2 by Gauss diagram ---------------------------------------------------

long v2_gauss(const Diagram& d) {
  require_link(d);
  if (count_components(d) != 1)
    throw SkeinError("not_a_knot", "v2 is defined for one-component diagrams");
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return 0;
  if (planarity_genus(d) != 0) throw SkeinError("nonzero_genus", "v2 needs a planar diagram");

  CombMap m(d);
  const auto orbit = m.orbits().front();
  const int len = static_cast<int>(orbit.size());  // = 2n passages

  // passage sequence along the knot: (crossing index, over?, sign)
  struct Passage {
    int ci;
    bool over;
    int sign;
  };
  std::vector<Passage> seq;
  for (int arc : orbit) {
    Port p = m.in_port(arc);
    const Crossing& c = d.crossings[p.ci];
    seq.push_back({p.ci, p.pos == 1 || p.pos == 3, c.kind == CrossingKind::positive ? 1 : -1});
  }

  long total = 0;
  for (int theta = 0; theta < len; ++theta) {
    std::vector<int> over_pos(n, -1), under_pos(n, -1);
    for (int k = 0; k < len; ++k) {
      const int lin = (k - theta + len) % len;
      (seq[k].over ? over_pos : under_pos)[seq[k].ci] = lin;
    }
    long acc = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        // pattern: under(a) < over(b) < over(a) < under(b)
        if (under_pos[a] < over_pos[b] && over_pos[b] < over_pos[a] &&
            over_pos[a] < under_pos[b])
          acc += static_cast<long>(d.crossings[a].kind == CrossingKind::positive ? 1 : -1) *
                 (d.crossings[b].kind == CrossingKind::positive ? 1 : -1);
      }
    total += acc;
  }
  if (total % len != 0)
    throw SkeinError("internal", "basepoint average of v2 is not integral");
  return total / len;
}

// ---- Conway polynomial by skein recursion ----------------------------------

namespace {

bool is_split(const Diagram& d) {
  if (d.crossings.empty()) return d.zero_crossing_components > 1;
  if (d.zero_crossing_components > 0) return true;
  CombMap m(d);
  return m.graph_components().size() > 1;
}

// first crossing along the canonical traversal whose first visit runs under
std::optional<int> first_descending_violation(const Diagram& d) {
  if (d.crossings.empty()) return std::nullopt;
  CombMap m(d);
  std::set<int> seen;
  for (const auto& orbit : m.orbits()) {
    for (int arc : orbit) {
      Port p = m.in_port(arc);
      const Crossing& c = d.crossings[p.ci];
      if (seen.insert(c.id).second) {
        const bool over = p.pos == 1 || p.pos == 3;
        if (!over) return c.id;
      }
    }
  }
  return std::nullopt;
}

Diagram oriented_smoothing(const Diagram& d, int crossing_id) {
  return resolve(make_singular(d, crossing_id), {crossing_id}, ResolutionSign::zero);
}

struct ConwayCtx {
  std::map<std::string, RingElem> memo;
  int steps = 0;
  int budget;
};

RingElem conway_rec(const Diagram& input, ConwayCtx& ctx) {
  if (++ctx.steps > ctx.budget)
    throw SkeinError("budget_exceeded", "conway skein recursion budget exhausted");

  Diagram d = simplify(input, 400).diagram;
  const std::string key = serialize(d);
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;

  RingElem result;
  if (d.crossings.empty()) {
    result = d.zero_crossing_components == 1 ? RingElem::from_int(1) : RingElem();
  } else if (is_split(d)) {
    result = RingElem();
  } else {
    auto c = first_descending_violation(d);
    if (!c) {
      // descending diagram: an unlink
      result = count_components(d) == 1 ? RingElem::from_int(1) : RingElem();
    } else {
      const bool was_positive =
          d.crossing_by_id(*c).kind == CrossingKind::positive;
      Diagram switched = crossing_change(d, *c).first;
      Diagram smoothed = oriented_smoothing(d, *c);
      const RingElem z = RingElem::monomial(1);
      if (was_positive)
        result = conway_rec(switched, ctx) + z * conway_rec(smoothed, ctx);
      else
        result = conway_rec(switched, ctx) - z * conway_rec(smoothed, ctx);
    }
  }
  ctx.memo.emplace(key, result);
  return result;
}

}  // namespace

RingElem conway_polynomial(const Diagram& d, int budget) {
  require_link(d);
  ConwayCtx ctx;
  ctx.budget = budget;
  return conway_rec(d, ctx);
}

long v2_skein_oracle(const Diagram& d, int budget) {
  if (count_components(d) != 1)
    throw SkeinError("not_a_knot", "the a2 oracle is defined for knots");
  const mpz_class a2 = conway_polynomial(d, budget).coeff(2);
  if (!a2.fits_slong_p()) throw SkeinError("internal", "a2 out of long range");
  return a2.get_si();
}

// ---- derived invariants and the registry -----------------------------------

namespace {

int sole_double_point(const Diagram& d) {
  int id = -1;
  for (const auto& c : d.crossings)
    if (c.kind == CrossingKind::singular) {
      if (id >= 0)
        throw SkeinError("bad_order", "expected an order-1 singular diagram");
      id = c.id;
    }
  if (id < 0) throw SkeinError("bad_order", "diagram has no singular crossing");
  return id;
}

}  // namespace

SingularInvariant derive_singular(const LinkInvariant& F) {
  SingularInvariant f;
  f.name = "d_" + F.name;
  auto eval = F.eval;
  f.eval = [eval](const Diagram& d) {
    const int p = sole_double_point(d);
    return eval(resolve(d, {p}, ResolutionSign::plus)) -
           eval(resolve(d, {p}, ResolutionSign::minus));
  };
  return f;
}

const std::vector<LinkInvariant>& link_invariants() {
  static const std::vector<LinkInvariant> table = [] {
    std::vector<LinkInvariant> v;
    v.push_back({"jones", LinkInvariant::Certificate::test_verified,
                 [](const Diagram& d) { return jones_A(d); }});
    v.push_back({"const1", LinkInvariant::Certificate::proven_by_construction,
                 [](const Diagram&) { return RingElem::from_int(1); }});
    v.push_back({"v2x0", LinkInvariant::Certificate::test_verified, [](const Diagram& d) {
                   if (count_components(d) != 1) return RingElem();
                   return RingElem::from_int(v2_gauss(d));
                 }});
    return v;
  }();
  return table;
}

std::optional<LinkInvariant> link_invariant(const std::string& name) {
  for (const auto& F : link_invariants())
    if (F.name == name) return F;
  return std::nullopt;
}

const std::vector<SingularInvariant>& singular_invariants() {
  static const std::vector<SingularInvariant> table = [] {
    std::vector<SingularInvariant> v;
    v.push_back(derive_singular(*link_invariant("jones")));
    v.push_back(derive_singular(*link_invariant("const1")));
    v.push_back(derive_singular(*link_invariant("v2x0")));
    // negative controls: not integrable
    v.push_back({"jonesplus", [](const Diagram& d) {
                   const int p = sole_double_point(d);
                   return jones_A(resolve(d, {p}, ResolutionSign::plus));
                 }});
    v.push_back({"const1s", [](const Diagram&) { return RingElem::from_int(1); }});
    return v;
  }();
  return table;
}

std::optional<SingularInvariant> singular_invariant(const std::string& name) {
  for (const auto& f : singular_invariants())
    if (f.name == name) return f;
  return std::nullopt;
}

// ---- oriented/unoriented smoothing with re-orientation ----------------------

Diagram smooth_crossing(const Diagram& d, int crossing_id, bool a_type) {
  const int idx = d.index_of(crossing_id);
  if (idx < 0)
    throw SkeinError("no_such_crossing", "no crossing with id", std::to_string(crossing_id));
  const Crossing& c = d.crossings[idx];
  if (!c.is_signed()) throw SkeinError("not_signed", "smoothing needs a signed crossing");

  // smoothing pairings on the rotational slots
  const std::array<std::pair<int, int>, 2> pairs =
      a_type ? std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}}
             : std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}};

  CombMap m(d);
  // trace the smoothed curves to find which arcs must reverse orientation
  std::map<int, bool> flip;  // arc -> traversed against its orientation
  std::set<int> visited;
  std::set<int> all_arcs;
  for (const auto& cc : d.crossings)
    for (int e : cc.ends) all_arcs.insert(e);

  auto junction_partner = [&](int pos) {
    for (const auto& [x, y] : pairs) {
      if (pos == x) return y;
      if (pos == y) return x;
    }
    return -1;
  };

  for (int start : all_arcs) {
    if (visited.count(start)) continue;
    int arc = start;
    bool fwd = true;
    while (true) {
      visited.insert(arc);
      flip[arc] = !fwd;
      Port p = fwd ? m.in_port(arc) : m.out_port(arc);
      int next;
      bool nfwd;
      if (p.ci == idx) {
        const int q = junction_partner(p.pos);
        next = d.crossings[idx].ends[q];
        nfwd = !m.incoming({idx, q});  // forward iff we leave by an out-slot
      } else {
        const int q = (p.pos + 2) % 4;
        next = d.crossings[p.ci].ends[q];
        nfwd = fwd;  // an ordinary passage preserves direction
      }
      if (next == start) break;
      arc = next;
      fwd = nfwd;
    }
  }

  detail::Assembly a(d);
  a.remove_only(c.id);
  a.arcs.join(c.ends[pairs[0].first], c.ends[pairs[0].second]);
  a.arcs.join(c.ends[pairs[1].first], c.ends[pairs[1].second]);

  for (auto& p : a.protos) {
    int reversed = 0;
    if (flip[p.s1_in]) {
      std::swap(p.s1_in, p.s1_out);
      ++reversed;
    }
    if (flip[p.s2_in]) {
      std::swap(p.s2_in, p.s2_out);
      ++reversed;
    }
    if (reversed == 1) {
      if (p.kind == CrossingKind::positive)
        p.kind = CrossingKind::negative;
      else if (p.kind == CrossingKind::negative)
        p.kind = CrossingKind::positive;
      else
        p.flag = !p.flag;
    }
  }
  return a.finish();
}

}  // namespace skein
