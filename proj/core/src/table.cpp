#include "skein/table.hpp"

#include "assembly.hpp"

#include <numeric>

namespace skein {

Diagram unknot() { return unlink(1); }

Diagram unlink(int m) {
  if (m < 1) throw SkeinError("bad_argument", "unlink needs at least one component");
  Diagram d;
  d.components = m;
  d.zero_crossing_components = m;
  d.arcs = 0;
  return d;
}

Diagram trefoil_left() {
  return from_pd_tuples({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}});
}

Diagram figure_eight() {
  return from_pd_tuples({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
}

Diagram torus_5_1() {
  return from_pd_tuples({{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}});
}

Diagram knot_5_2() {
  return from_pd_tuples({{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}});
}

Diagram hopf_positive() { return from_pd_tuples({{1, 3, 2, 4}, {3, 1, 4, 2}}); }

Diagram whitehead() {
  return from_pd_tuples(
      {{6, 1, 7, 2}, {10, 7, 5, 8}, {4, 5, 1, 6}, {2, 10, 3, 9}, {8, 4, 9, 3}});
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 2) throw SkeinError("bad_argument", "braids need at least two strands");
  Diagram base;  // assembling from scratch
  detail::Assembly a(base);
  std::vector<int> first(strands), cur(strands);
  for (int j = 0; j < strands; ++j) first[j] = cur[j] = a.fresh();
  int id = 0;
  for (int letter : word) {
    const int j = std::abs(letter) - 1;
    if (j < 0 || j + 1 >= strands)
      throw SkeinError("bad_argument", "braid letter out of range", std::to_string(letter));
    const int out_left = a.fresh(), out_right = a.fresh();
    if (letter > 0) {
      // positive: the strand entering on the left passes under
      a.add_signed(id++, true, cur[j], out_right, cur[j + 1], out_left);
    } else {
      a.add_signed(id++, false, cur[j + 1], out_left, cur[j], out_right);
    }
    cur[j] = out_left;
    cur[j + 1] = out_right;
  }
  for (int j = 0; j < strands; ++j) a.arcs.join(cur[j], first[j]);
  Diagram d = a.finish();
  require_valid(d);
  return d;
}

Diagram connected_sum(const Diagram& k1, const Diagram& k2) {
  if (count_components(k1) != 1 || count_components(k2) != 1 || k1.crossings.empty() ||
      k2.crossings.empty())
    throw SkeinError("bad_argument", "connected sum needs two knot diagrams with crossings");
  Diagram a = canonical_renumber(k1);
  Diagram b = canonical_renumber(k2);
  const int arc_off = a.arcs;
  const int id_off = a.max_crossing_id() + 1;
  for (auto& c : b.crossings) {
    c.id += id_off;
    for (auto& e : c.ends) e += arc_off;
  }
  // splice arc 1 of a with the first arc of b
  const int x = 1, y = arc_off + 1;
  Diagram merged;
  merged.crossings = a.crossings;
  merged.crossings.insert(merged.crossings.end(), b.crossings.begin(), b.crossings.end());
  CombMap ma(a);
  // rename in-slots: x's target now receives y, y's target receives x
  auto rename_in = [&](int arc, int to) {
    for (auto& c : merged.crossings)
      for (int pos = 0; pos < 4; ++pos)
        if (c.ends[pos] == arc && c.incoming(pos)) {
          c.ends[pos] = to;
          return;
        }
  };
  rename_in(x, -1);  // placeholder to avoid renaming the fresh y occurrence
  rename_in(y, x);
  for (auto& c : merged.crossings)
    for (int pos = 0; pos < 4; ++pos)
      if (c.ends[pos] == -1) c.ends[pos] = y;
  merged.zero_crossing_components = 0;
  Diagram out = canonical_renumber(merged);
  require_valid(out);
  return out;
}

const std::vector<std::pair<std::string, Diagram>>& knot_table() {
  static const std::vector<std::pair<std::string, Diagram>> table = [] {
    std::vector<std::pair<std::string, Diagram>> t;
    t.push_back({"3_1", trefoil_left()});
    t.push_back({"3_1m", mirror(trefoil_left())});
    t.push_back({"4_1", figure_eight()});
    t.push_back({"5_1", torus_5_1()});
    t.push_back({"5_2", knot_5_2()});
    t.push_back({"5_2m", mirror(knot_5_2())});
    t.push_back({"7_1", braid_closure(2, {1, 1, 1, 1, 1, 1, 1})});
    t.push_back({"granny", connected_sum(trefoil_left(), trefoil_left())});
    t.push_back({"square", connected_sum(trefoil_left(), mirror(trefoil_left()))});
    t.push_back({"8_19", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})});
    t.push_back({"b3_alt4", braid_closure(3, {1, -2, 1, -2, 1, -2, 1, -2})});
    t.push_back({"b3_tw4", braid_closure(3, {1, 1, -2, 1})});
    t.push_back({"b2_5a", braid_closure(2, {1, 1, 1, 1, -1})});
    return t;
  }();
  return table;
}

Diagram seed_by_name(const std::string& name) {
  if (name == "unknot") return unknot();
  if (name == "unlink2") return unlink(2);
  if (name == "trefoil") return trefoil_left();
  if (name == "figure_eight") return figure_eight();
  if (name == "5_1") return torus_5_1();
  if (name == "5_2") return knot_5_2();
  if (name == "hopf") return hopf_positive();
  if (name == "whitehead") return whitehead();
  for (const auto& [n, d] : knot_table())
    if (n == name) return d;
  throw SkeinError("no_such_seed", "unknown seed diagram", name);
}

std::vector<std::string> seed_names() {
  return {"unknot", "unlink2", "trefoil", "figure_eight", "5_1", "5_2", "hopf", "whitehead"};
}

}  // namespace skein
