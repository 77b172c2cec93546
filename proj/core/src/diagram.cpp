#include "skein/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

using Json = nlohmann::ordered_json;

std::string kind_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::positive: return "pos";
    case CrossingKind::negative: return "neg";
    case CrossingKind::singular: return "sing";
  }
  return "?";
}

CrossingKind kind_from_name(const std::string& s) {
  if (s == "pos") return CrossingKind::positive;
  if (s == "neg") return CrossingKind::negative;
  if (s == "sing") return CrossingKind::singular;
  throw SkeinError("bad_kind", "unknown crossing kind", s);
}

bool Crossing::incoming(int pos) const {
  switch (pos) {
    case 0: return true;
    case 2: return false;
    case 1:
      if (kind == CrossingKind::negative) return true;
      if (kind == CrossingKind::positive) return false;
      return !e3_in;
    case 3:
      if (kind == CrossingKind::positive) return true;
      if (kind == CrossingKind::negative) return false;
      return e3_in;
  }
  throw SkeinError("bad_ends", "port position out of range");
}

void Crossing::normalize() {
  if (kind != CrossingKind::singular) return;
  const int in2pos = e3_in ? 3 : 1;
  if (ends[in2pos] >= ends[0]) return;  // ends[0] already the lowest incoming
  if (in2pos == 3) {
    ends = {ends[3], ends[0], ends[1], ends[2]};
    e3_in = false;
  } else {
    ends = {ends[1], ends[2], ends[3], ends[0]};
    e3_in = true;
  }
}

bool Crossing::operator==(const Crossing& o) const {
  if (id != o.id || kind != o.kind || ends != o.ends) return false;
  if (kind == CrossingKind::singular && e3_in != o.e3_in) return false;
  return true;
}

int Diagram::order() const {
  int n = 0;
  for (const auto& c : crossings)
    if (c.kind == CrossingKind::singular) ++n;
  return n;
}

const Crossing& Diagram::crossing_by_id(int id) const {
  for (const auto& c : crossings)
    if (c.id == id) return c;
  throw SkeinError("no_such_crossing", "crossing id not present", std::to_string(id));
}

int Diagram::index_of(int id) const {
  for (size_t i = 0; i < crossings.size(); ++i)
    if (crossings[i].id == id) return static_cast<int>(i);
  return -1;
}

int Diagram::max_crossing_id() const {
  int m = -1;
  for (const auto& c : crossings) m = std::max(m, c.id);
  return m;
}

bool Diagram::operator==(const Diagram& o) const {
  return components == o.components && arcs == o.arcs &&
         zero_crossing_components == o.zero_crossing_components && crossings == o.crossings;
}

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
  if (!pass) ok = false;
}

// -- CombMap -------------------------------------------------------------

CombMap::CombMap(const Diagram& d) : d_(&d) {
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& c = d.crossings[ci];
    for (int pos = 0; pos < 4; ++pos) {
      Port p{static_cast<int>(ci), pos};
      auto& slot = c.incoming(pos) ? in_ : out_;
      auto [it, fresh] = slot.emplace(c.ends[pos], p);
      if (!fresh)
        throw SkeinError("arc_pairing", "arc has two ends with the same role",
                         std::to_string(c.ends[pos]));
    }
  }
  for (const auto& [arc, p] : in_)
    if (!out_.count(arc))
      throw SkeinError("unpaired_arc", "arc never leaves a crossing", std::to_string(arc));
  for (const auto& [arc, p] : out_)
    if (!in_.count(arc))
      throw SkeinError("unpaired_arc", "arc never enters a crossing", std::to_string(arc));
}

bool CombMap::has_arc(int arc) const { return in_.count(arc) != 0; }

Port CombMap::out_port(int arc) const {
  auto it = out_.find(arc);
  if (it == out_.end()) throw SkeinError("no_such_arc", "unknown arc", std::to_string(arc));
  return it->second;
}

Port CombMap::in_port(int arc) const {
  auto it = in_.find(arc);
  if (it == in_.end()) throw SkeinError("no_such_arc", "unknown arc", std::to_string(arc));
  return it->second;
}

int CombMap::arc_at(Port p) const { return d_->crossings[p.ci].ends[p.pos]; }

bool CombMap::incoming(Port p) const { return d_->crossings[p.ci].incoming(p.pos); }

Port CombMap::sigma(Port p) const { return {p.ci, (p.pos + 1) % 4}; }

Port CombMap::alpha(Port p) const {
  const int arc = arc_at(p);
  return incoming(p) ? out_port(arc) : in_port(arc);
}

int CombMap::succ(int arc) const {
  Port p = in_port(arc);
  return d_->crossings[p.ci].ends[(p.pos + 2) % 4];
}

std::vector<std::vector<int>> CombMap::orbits() const {
  std::vector<std::vector<int>> result;
  std::set<int> seen;
  for (const auto& [arc, p] : in_) {
    if (seen.count(arc)) continue;
    std::vector<int> orbit;
    int a = arc;
    do {
      orbit.push_back(a);
      seen.insert(a);
      a = succ(a);
    } while (a != arc);
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<std::vector<Port>> CombMap::faces() const {
  std::vector<std::vector<Port>> result;
  std::set<Port> seen;
  for (size_t ci = 0; ci < d_->crossings.size(); ++ci) {
    for (int pos = 0; pos < 4; ++pos) {
      Port start{static_cast<int>(ci), pos};
      if (seen.count(start)) continue;
      std::vector<Port> face;
      Port p = start;
      do {
        face.push_back(p);
        seen.insert(p);
        p = sigma(alpha(p));
      } while (!(p == start));
      // rotate to smallest port for a deterministic representative
      auto mn = std::min_element(face.begin(), face.end());
      std::rotate(face.begin(), mn, face.end());
      result.push_back(std::move(face));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

std::vector<std::vector<int>> CombMap::graph_components() const {
  const int n = static_cast<int>(d_->crossings.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [arc, pin] : in_) {
    Port pout = out_.at(arc);
    parent[find(pin.ci)] = find(pout.ci);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> result;
  for (auto& [root, members] : groups) result.push_back(std::move(members));
  return result;
}

// -- direction solving for singular crossings -----------------------------

namespace {

// Occurrences of every arc over all crossing slots.
std::map<int, std::vector<Port>> occurrences(const std::vector<Crossing>& cs) {
  std::map<int, std::vector<Port>> occ;
  for (size_t ci = 0; ci < cs.size(); ++ci)
    for (int pos = 0; pos < 4; ++pos)
      occ[cs[ci].ends[pos]].push_back({static_cast<int>(ci), pos});
  return occ;
}

bool roles_coherent(const std::vector<Crossing>& cs) {
  std::map<int, int> ins, outs;
  for (const auto& c : cs)
    for (int pos = 0; pos < 4; ++pos) (c.incoming(pos) ? ins : outs)[c.ends[pos]]++;
  for (const auto& [arc, k] : ins)
    if (k != 1 || outs[arc] != 1) return false;
  for (const auto& [arc, k] : outs)
    if (k != 1) return false;
  return true;
}

// Does every succession orbit carry consecutive labels over a contiguous range?
bool numbering_consistent(const Diagram& d) {
  try {
    CombMap m(d);
    for (const auto& orbit : m.orbits()) {
      int lo = *std::min_element(orbit.begin(), orbit.end());
      int hi = *std::max_element(orbit.begin(), orbit.end());
      if (hi - lo + 1 != static_cast<int>(orbit.size())) return false;
      for (int a : orbit) {
        int expect = (a == hi) ? lo : a + 1;
        if (m.succ(a) != expect) return false;
      }
    }
  } catch (const SkeinError&) {
    return false;
  }
  return true;
}

// Assign the free e3_in bits (slots 1/3 of the listed crossings) so that arc
// roles pair up and, if possible, the consecutive arc numbering holds.
// Propagation from slots with known roles does most of the work; any leftover
// bits are searched exhaustively in deterministic order (e3_in=true first at
// the lowest crossing index).
void solve_directions(Diagram& d, const std::vector<int>& free_cis) {
  if (free_cis.empty()) return;
  auto occ = occurrences(d.crossings);

  std::vector<int> undecided;
  std::set<int> free_set(free_cis.begin(), free_cis.end());
  // propagate: a free slot whose arc also occurs at a slot with a known role
  // is forced to the opposite role.
  bool progress = true;
  std::set<int> decided;
  while (progress) {
    progress = false;
    for (int ci : free_cis) {
      if (decided.count(ci)) continue;
      auto& c = d.crossings[ci];
      for (int pos : {1, 3}) {
        int arc = c.ends[pos];
        for (const Port& other : occ[arc]) {
          if (other.ci == ci && other.pos == pos) continue;
          bool known = !free_set.count(other.ci) || decided.count(other.ci) ||
                       other.pos == 0 || other.pos == 2;
          if (!known) continue;
          bool other_in = d.crossings[other.ci].incoming(other.pos);
          // this occurrence takes the opposite role
          bool this_in = !other_in;
          c.e3_in = (pos == 3) ? this_in : !this_in;
          decided.insert(ci);
          progress = true;
          break;
        }
        if (decided.count(ci)) break;
      }
    }
  }
  for (int ci : free_cis)
    if (!decided.count(ci)) undecided.push_back(ci);
  if (undecided.empty()) return;
  if (undecided.size() > 12)
    throw SkeinError("unsupported", "too many underdetermined singular crossings",
                     std::to_string(undecided.size()));

  // exhaustive over the residual bits; prefer e3_in=true lexicographically
  const size_t n = undecided.size();
  int best_coherent = -1;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    for (size_t i = 0; i < n; ++i)
      d.crossings[undecided[i]].e3_in = !((mask >> i) & 1);
    if (!roles_coherent(d.crossings)) continue;
    if (best_coherent < 0) best_coherent = static_cast<int>(mask);
    if (numbering_consistent(d)) return;
  }
  const size_t pick = best_coherent >= 0 ? static_cast<size_t>(best_coherent) : 0;
  for (size_t i = 0; i < n; ++i)
    d.crossings[undecided[i]].e3_in = !((pick >> i) & 1);
}

}  // namespace

// -- validation ----------------------------------------------------------

Report validate(const Diagram& d) {
  Report r;

  bool structure_ok = true;
  std::set<int> ids;
  for (const auto& c : d.crossings) {
    if (!ids.insert(c.id).second) {
      r.add("structure", false, "duplicate crossing id " + std::to_string(c.id));
      structure_ok = false;
    }
    for (int e : c.ends)
      if (e <= 0) {
        r.add("structure", false, "non-positive arc label at crossing " + std::to_string(c.id));
        structure_ok = false;
      }
  }
  if (structure_ok) r.add("structure", true);
  if (!structure_ok) return r;

  auto occ = occurrences(d.crossings);
  bool pairing_ok = true;
  for (const auto& [arc, ports] : occ)
    if (ports.size() != 2) {
      r.add("arc_pairing", false,
            "arc " + std::to_string(arc) + " used " + std::to_string(ports.size()) + " times");
      pairing_ok = false;
    }
  if (pairing_ok && !roles_coherent(d.crossings)) {
    r.add("arc_pairing", false, "an arc is not incoming exactly once and outgoing exactly once");
    pairing_ok = false;
  }
  if (pairing_ok) r.add("arc_pairing", true);
  if (!pairing_ok) return r;

  r.add("arc_count", static_cast<int>(occ.size()) == d.arcs,
        "declared " + std::to_string(d.arcs) + ", found " + std::to_string(occ.size()));

  CombMap m(d);
  const auto orbits = m.orbits();

  bool numbering_ok = true;
  for (const auto& orbit : orbits) {
    int lo = *std::min_element(orbit.begin(), orbit.end());
    int hi = *std::max_element(orbit.begin(), orbit.end());
    if (hi - lo + 1 != static_cast<int>(orbit.size())) {
      numbering_ok = false;
      break;
    }
    for (int a : orbit)
      if (m.succ(a) != ((a == hi) ? lo : a + 1)) {
        numbering_ok = false;
        break;
      }
  }
  r.add("numbering", numbering_ok,
        numbering_ok ? "" : "arc labels not consecutive along a component");

  const int found = static_cast<int>(orbits.size()) + d.zero_crossing_components;
  r.add("component_count", found == d.components && d.zero_crossing_components >= 0,
        "declared " + std::to_string(d.components) + ", found " + std::to_string(found));

  // For signed crossings the stored sign must match the over-strand flow
  // implied by the numbering (redundant with the orbit walk, but named).
  bool signs_ok = true;
  if (numbering_ok) {
    std::map<int, std::pair<int, int>> range;  // arc -> [lo,hi] of its component
    for (const auto& orbit : orbits) {
      int lo = *std::min_element(orbit.begin(), orbit.end());
      int hi = *std::max_element(orbit.begin(), orbit.end());
      for (int a : orbit) range[a] = {lo, hi};
    }
    auto nxt = [&](int a) {
      auto [lo, hi] = range.at(a);
      return a == hi ? lo : a + 1;
    };
    for (const auto& c : d.crossings) {
      if (!c.is_signed()) continue;
      const int over_in = c.kind == CrossingKind::positive ? c.ends[3] : c.ends[1];
      const int over_out = c.kind == CrossingKind::positive ? c.ends[1] : c.ends[3];
      if (nxt(c.ends[0]) != c.ends[2] || nxt(over_in) != over_out) {
        signs_ok = false;
        r.add("sign_orientation", false, "crossing " + std::to_string(c.id));
        break;
      }
    }
  }
  if (signs_ok) r.add("sign_orientation", true);

  return r;
}

void require_valid(const Diagram& d) {
  Report r = validate(d);
  if (!r.ok) {
    std::string which;
    for (const auto& c : r.checks)
      if (!c.ok) which += (which.empty() ? "" : ", ") + c.name + (c.detail.empty() ? "" : ": " + c.detail);
    throw SkeinError("invalid_diagram", "diagram fails validation", which);
  }
}

void require_link(const Diagram& d) {
  if (d.order() != 0)
    throw SkeinError("not_a_link", "operation requires a diagram without singular crossings");
}

int count_components(const Diagram& d) {
  CombMap m(d);
  return static_cast<int>(m.orbits().size()) + d.zero_crossing_components;
}

int planarity_genus(const Diagram& d) {
  if (d.crossings.empty()) return 0;
  CombMap m(d);
  const auto comps = m.graph_components();
  const auto fs = m.faces();
  std::vector<int> croot(d.crossings.size());
  for (size_t g = 0; g < comps.size(); ++g)
    for (int ci : comps[g]) croot[ci] = static_cast<int>(g);
  std::vector<int> V(comps.size(), 0), E(comps.size(), 0), F(comps.size(), 0);
  for (size_t g = 0; g < comps.size(); ++g) V[g] = static_cast<int>(comps[g].size());
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) E[croot[ci]] += 2;  // 4 ends / 2 per arc
  for (const auto& f : fs) F[croot[f.front().ci]]++;
  int genus = 0;
  for (size_t g = 0; g < comps.size(); ++g) {
    const int chi = V[g] - E[g] + F[g];
    genus += (2 - chi) / 2;
  }
  return genus;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) {
    if (c.kind == CrossingKind::singular)
      throw SkeinError("not_a_link", "writhe undefined: diagram has a singular crossing",
                       std::to_string(c.id));
    w += c.kind == CrossingKind::positive ? 1 : -1;
  }
  return w;
}

// -- JSON ------------------------------------------------------------------

std::string serialize(const Diagram& d) {
  Json j;
  j["format"] = "pdcode-v1";
  j["components"] = d.components;
  j["zero_crossing_components"] = d.zero_crossing_components;
  Json cs = Json::array();
  std::vector<Crossing> sorted = d.crossings;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& c : sorted) {
    Json cj;
    cj["id"] = c.id;
    cj["kind"] = kind_name(c.kind);
    cj["ends"] = c.ends;
    cs.push_back(std::move(cj));
  }
  j["crossings"] = std::move(cs);
  return j.dump();
}

Diagram parse_pd(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw SkeinError("bad_json", "input is not well-formed JSON", e.what());
  }
  if (!j.is_object()) throw SkeinError("bad_json", "top level must be an object");
  for (const char* key : {"format", "components", "zero_crossing_components", "crossings"})
    if (!j.contains(key)) throw SkeinError("missing_field", "missing field", key);
  if (j["format"] != "pdcode-v1")
    throw SkeinError("bad_field", "unsupported format", j["format"].dump());

  Diagram d;
  if (!j["components"].is_number_integer() || !j["zero_crossing_components"].is_number_integer())
    throw SkeinError("bad_field", "counts must be integers");
  d.components = j["components"].get<int>();
  d.zero_crossing_components = j["zero_crossing_components"].get<int>();
  if (!j["crossings"].is_array()) throw SkeinError("bad_field", "crossings must be an array");

  std::set<int> ids;
  std::vector<int> free_cis;
  for (const auto& cj : j["crossings"]) {
    for (const char* key : {"id", "kind", "ends"})
      if (!cj.contains(key)) throw SkeinError("missing_field", "missing crossing field", key);
    Crossing c;
    c.id = cj["id"].get<int>();
    if (!ids.insert(c.id).second)
      throw SkeinError("duplicate_crossing_id", "duplicate crossing id", std::to_string(c.id));
    c.kind = kind_from_name(cj["kind"].get<std::string>());
    if (!cj["ends"].is_array() || cj["ends"].size() != 4)
      throw SkeinError("bad_ends", "ends must list exactly 4 arcs", std::to_string(c.id));
    for (int i = 0; i < 4; ++i) {
      c.ends[i] = cj["ends"][i].get<int>();
      if (c.ends[i] <= 0)
        throw SkeinError("bad_ends", "arc labels must be positive", std::to_string(c.id));
    }
    if (c.kind == CrossingKind::singular) free_cis.push_back(static_cast<int>(d.crossings.size()));
    d.crossings.push_back(c);
  }
  std::sort(d.crossings.begin(), d.crossings.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });

  // re-locate singular crossings after the sort
  free_cis.clear();
  for (size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].kind == CrossingKind::singular) free_cis.push_back(static_cast<int>(i));

  auto occ = occurrences(d.crossings);
  d.arcs = static_cast<int>(occ.size());
  for (const auto& [arc, ports] : occ)
    if (ports.size() != 2)
      throw SkeinError("unpaired_arc",
                       "arc " + std::to_string(arc) + " appears " +
                           std::to_string(ports.size()) + " times (expected 2)",
                       std::to_string(arc));

  solve_directions(d, free_cis);
  for (auto& c : d.crossings) c.normalize();
  return d;
}

// -- canonical renumbering -------------------------------------------------

Diagram canonical_renumber(const Diagram& d) {
  if (d.crossings.empty()) {
    Diagram out = d;
    out.arcs = 0;
    out.components = d.zero_crossing_components;
    return out;
  }
  CombMap m(d);
  auto orbits = m.orbits();
  // order components by smallest original label; walk each from that label
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& orbit : orbits) {
    int start = *std::min_element(orbit.begin(), orbit.end());
    int a = start;
    do {
      relabel[a] = next++;
      a = m.succ(a);
    } while (a != start);
  }
  Diagram out = d;
  for (auto& c : out.crossings) {
    for (auto& e : c.ends) e = relabel.at(e);
    c.normalize();
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  out.arcs = next - 1;
  out.components = static_cast<int>(orbits.size()) + d.zero_crossing_components;
  return out;
}

// -- isomorphism-quotient string -------------------------------------------

namespace {

std::string iso_string_for(const Diagram& d, const CombMap& m,
                           const std::vector<std::vector<int>>& orbits,
                           const std::vector<int>& order, const std::vector<int>& starts) {
  std::map<int, int> relabel;
  int next = 1;
  for (size_t k = 0; k < order.size(); ++k) {
    const auto& orbit = orbits[order[k]];
    int a = orbit[starts[k]];
    const int first = a;
    do {
      relabel[a] = next++;
      a = m.succ(a);
    } while (a != first);
  }
  std::vector<std::string> rows;
  for (const auto& c : d.crossings) {
    Crossing tmp = c;
    for (auto& e : tmp.ends) e = relabel.at(e);
    tmp.normalize();
    std::ostringstream os;
    os << kind_name(tmp.kind);
    if (tmp.kind == CrossingKind::singular) os << (tmp.e3_in ? "^" : "v");
    for (int e : tmp.ends) os << "," << e;
    rows.push_back(os.str());
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "z" << d.zero_crossing_components << ";";
  for (const auto& r : rows) os << r << ";";
  return os.str();
}

}  // namespace

std::string iso_canonical_string(const Diagram& d) {
  if (d.crossings.empty()) return "z" + std::to_string(d.zero_crossing_components) + ";";
  CombMap m(d);
  auto orbits = m.orbits();
  const size_t mcomp = orbits.size();
  size_t combos = 1;
  for (const auto& o : orbits) combos *= o.size();
  size_t fact = 1;
  for (size_t i = 2; i <= mcomp; ++i) fact *= i;
  if (mcomp > 5 || combos * fact > 200000) return "exact:" + serialize(canonical_renumber(d));

  std::vector<int> order(mcomp);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  do {
    std::vector<int> starts(mcomp, 0);
    while (true) {
      std::string s = iso_string_for(d, m, orbits, order, starts);
      if (best.empty() || s < best) best = s;
      size_t i = 0;
      for (; i < mcomp; ++i) {
        if (++starts[i] < static_cast<int>(orbits[order[i]].size())) break;
        starts[i] = 0;
      }
      if (i == mcomp) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// -- table construction helpers ---------------------------------------------

Diagram from_pd_tuples(const std::vector<std::array<int, 4>>& tuples,
                       int zero_crossing_components) {
  Diagram d;
  d.zero_crossing_components = zero_crossing_components;
  std::vector<int> free_cis;
  for (size_t i = 0; i < tuples.size(); ++i) {
    Crossing c;
    c.id = static_cast<int>(i);
    c.kind = CrossingKind::singular;  // provisional: direction solved below
    c.ends = {tuples[i][0], tuples[i][1], tuples[i][2], tuples[i][3]};
    free_cis.push_back(static_cast<int>(i));
    d.crossings.push_back(c);
  }
  auto occ = occurrences(d.crossings);
  d.arcs = static_cast<int>(occ.size());
  solve_directions(d, free_cis);
  for (auto& c : d.crossings) {
    c.kind = c.e3_in ? CrossingKind::positive : CrossingKind::negative;
    c.e3_in = false;
  }
  d.components = count_components(d);
  require_valid(d);
  return d;
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    switch (c.kind) {
      case CrossingKind::positive:
        c.ends = {c.ends[3], c.ends[0], c.ends[1], c.ends[2]};
        c.kind = CrossingKind::negative;
        break;
      case CrossingKind::negative:
        c.ends = {c.ends[1], c.ends[2], c.ends[3], c.ends[0]};
        c.kind = CrossingKind::positive;
        break;
      case CrossingKind::singular:
        break;  // no over/under to swap
    }
  }
  return out;
}

}  // namespace skein
