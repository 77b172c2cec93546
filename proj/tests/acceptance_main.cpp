// Acceptance suite: one pass/fail line per criterion, exact ring equality
// throughout. Exit status 0 only if every criterion passes.

#include "oracle_bracket.hpp"
#include "skein/integrability.hpp"
#include "skein/integrator.hpp"
#include "skein/invariants.hpp"
#include "skein/moves.hpp"
#include "skein/rng.hpp"
#include "skein/serde.hpp"
#include "skein/table.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <vector>

using namespace skein;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<bool(std::string&)>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << " ("
            << dt << " ms)" << (detail.empty() ? "" : "  -- " + detail) << std::endl;
  if (!ok) ++failures;
}

const SingularInvariant& d_jones() {
  static const SingularInvariant f = *singular_invariant("d_jones");
  return f;
}

std::vector<Diagram> corpus_seeds() {
  return {unknot(), trefoil_left(), figure_eight(), hopf_positive(), whitehead(), knot_5_2()};
}

// seeded random move events that keep the diagram small and planar
Diagram walk_diagram(Diagram d, Rng& rng, int steps, int maxc) {
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveSite> usable;
    for (const auto& s : enumerate_move_sites(d)) {
      int delta = s.kind == MoveKind::r2_add                                         ? 2
                  : (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) ? 1
                                                                                       : 0;
      if (static_cast<int>(d.crossings.size()) + delta <= maxc) usable.push_back(s);
    }
    if (usable.empty()) break;
    d = apply_move(d, usable[rng.pick(usable.size())]);
  }
  return d;
}

Diagram ensure_two_signed(Diagram d, Rng& rng) {
  while (true) {
    int n = 0;
    for (const auto& c : d.crossings)
      if (c.is_signed()) ++n;
    if (n >= 2) return d;
    std::vector<MoveSite> curls;
    for (const auto& s : enumerate_move_sites(d))
      if (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) curls.push_back(s);
    d = apply_move(d, curls[rng.pick(curls.size())]);
  }
}

HomotopyPath random_commutator(const Diagram& base, Rng& rng) {
  Diagram d = ensure_two_signed(walk_diagram(base, rng, 1 + rng.pick(2), 8), rng);
  std::vector<int> ids;
  for (const auto& c : d.crossings)
    if (c.is_signed()) ids.push_back(c.id);
  const int a = static_cast<int>(rng.pick(ids.size()));
  int b = static_cast<int>(rng.pick(ids.size() - 1));
  if (b >= a) ++b;
  return gen_loop_commutator(d, ids[a], ids[b]);
}

HomotopyPath random_change_path(const Diagram& base, Rng& rng, int changes) {
  HomotopyPath g;
  g.start = canonical_renumber(base);
  Diagram cur = g.start;
  for (int i = 0; i < changes && !cur.crossings.empty(); ++i) {
    std::vector<int> ids;
    for (const auto& c : cur.crossings)
      if (c.is_signed()) ids.push_back(c.id);
    if (ids.empty()) break;
    const int id = ids[rng.pick(ids.size())];
    const CrossingKind k = cur.crossing_by_id(id).kind;
    g.events.push_back({PathEvent::Type::change, {}, id,
                        k == CrossingKind::positive ? CrossingKind::negative
                                                    : CrossingKind::positive});
    cur = crossing_change(cur, id).first;
  }
  return g;
}

}  // namespace

int main() {
  const std::filesystem::path artifacts = "acceptance_witnesses";
  std::filesystem::create_directories(artifacts);

  // 1. forward direction of the local integrability theorem
  criterion(1, "derived jones passes conditions (1) and (2) on 100-item corpora", [&](std::string& detail) {
    CorpusParams kp;
    kp.count = 100;
    kp.walk_length = 3;
    kp.max_crossings = 10;
    kp.seed = 20260801;
    const Corpus kinks = gen_kink_corpus(corpus_seeds(), kp);
    const ConditionReport r1 = check_condition1(d_jones(), kinks);

    CorpusParams op = kp;
    op.seed = 20260802;
    const Corpus order2 = gen_order2_corpus(corpus_seeds(), op);
    const ConditionReport r2 = check_condition2(d_jones(), order2);

    detail = "condition1 items=" + std::to_string(r1.items) +
             ", condition2 items=" + std::to_string(r2.items);
    return r1.passed && r2.passed && r1.items == 100 && r2.items == 100;
  });

  // 2. integration along descending paths reproduces jones
  criterion(2, "integrate(d_jones) equals the state sum on six diagrams", [&](std::string& detail) {
    std::map<int, RingElem> base;
    base[1] = unlink_jones(1);
    base[2] = unlink_jones(2);
    const std::vector<std::pair<std::string, Diagram>> cases = {
        {"trefoil", trefoil_left()},   {"figure_eight", figure_eight()},
        {"5_1", torus_5_1()},          {"5_2", knot_5_2()},
        {"hopf", hopf_positive()},     {"whitehead", whitehead()}};
    for (const auto& [name, d] : cases) {
      if (integrate(d_jones(), d, base) != jones_A(d)) {
        detail = "mismatch on " + name;
        return false;
      }
    }
    return true;
  });

  // 3. path independence over randomized unlink-reaching paths
  criterion(3, "five randomized paths integrate identically (trefoil, figure-eight)", [&](std::string& detail) {
    const auto r1 = path_independence_report(d_jones(), trefoil_left(), 5, 31337);
    const auto r2 = path_independence_report(d_jones(), figure_eight(), 5, 424242);
    detail = "values=" + std::to_string(r1.values.size() + r2.values.size());
    return r1.all_equal && r2.all_equal;
  });

  // 4. global integrability around generated loops
  criterion(4, "zero defect on 50 kink, 50 commutator, 25 composite loops", [&](std::string& detail) {
    const std::vector<Diagram> seeds = {unknot(), trefoil_left(), figure_eight(),
                                        hopf_positive()};
    Rng rng(777001);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
      const HomotopyPath loop = gen_loop_kink(seeds[i % seeds.size()], rng.next());
      if (!loop_defect(d_jones(), loop).is_zero()) {
        detail = "kink loop " + std::to_string(i);
        return false;
      }
      ++checked;
    }
    for (int i = 0; i < 50; ++i) {
      const HomotopyPath loop = random_commutator(seeds[i % seeds.size()], rng);
      if (!loop_defect(d_jones(), loop).is_zero()) {
        detail = "commutator loop " + std::to_string(i);
        return false;
      }
      ++checked;
    }
    for (int i = 0; i < 25; ++i) {
      const Diagram& base = seeds[i % seeds.size()];
      HomotopyPath loop = (i % 2 == 0) ? gen_loop_kink(base, rng.next())
                                       : random_commutator(base, rng);
      // conjugate by a change path, or compose with a second loop
      if (i % 3 == 0) {
        const HomotopyPath gamma = random_change_path(loop.start, rng, 2);
        loop = conjugate_loop(reverse_path(gamma), loop);
      } else {
        const HomotopyPath other = gen_loop_kink(loop.start, rng.next());
        loop = concat_paths(loop, other);
      }
      if (!loop_defect(d_jones(), loop).is_zero()) {
        detail = "composite loop " + std::to_string(i);
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " loops";
    return checked == 125;
  });

  // 5. necessity controls with serialized witnesses
  criterion(5, "jonesplus fails condition (1), a condition-(2) witness lifts to a loop", [&](std::string& detail) {
    const auto jonesplus = *singular_invariant("jonesplus");

    // minimal kink: f(kink) = jones(unknot) = 1 != 0
    Diagram curl = apply_move(unknot(), {MoveKind::r1_add_pos, {-1, 0}});
    const Diagram kink = make_singular(curl, curl.max_crossing_id());
    Corpus minimal;
    minimal.kind = "kink";
    minimal.items.push_back({kink, {kink.crossings.front().id}, 0});
    const ConditionReport r1 = check_condition1(jonesplus, minimal);
    if (r1.passed) return false;
    std::ofstream(artifacts / "condition1_jonesplus.json")
        << condition_report_to_json(r1).dump() << "\n";

    // search the order-2 corpus for a commutation witness
    CorpusParams op;
    op.count = 100;
    op.walk_length = 3;
    op.max_crossings = 10;
    op.seed = 20260802;
    const Corpus order2 = gen_order2_corpus(corpus_seeds(), op);
    const ConditionReport r2 = check_condition2(jonesplus, order2);
    if (r2.passed || r2.failures.empty()) {
      detail = "no condition-(2) witness in the corpus";
      return false;
    }
    std::ofstream(artifacts / "condition2_jonesplus.json")
        << condition_report_to_json(r2).dump() << "\n";

    // transport the witness into a commutator loop with nonzero defect
    const ConditionFailure& w = r2.failures.front();
    const int p = order2.items[w.index].points[0];
    const int q = order2.items[w.index].points[1];
    const Diagram start =
        resolve(resolve(w.diagram, {p}, ResolutionSign::plus), {q}, ResolutionSign::plus);
    const HomotopyPath loop = gen_loop_commutator(start, p, q);
    const RingElem x = loop_defect(jonesplus, loop);
    if (x.is_zero()) {
      detail = "witness loop has zero defect";
      return false;
    }
    Json lj;
    lj["loop"] = path_to_json(loop);
    lj["defect"] = ring_to_json(x);
    std::ofstream(artifacts / "witness_loop.json") << lj.dump() << "\n";
    detail = "witness item " + std::to_string(w.index) + ", defect " + x.str();
    return true;
  });

  // 6. invariant correctness oracles
  criterion(6, "jones move-invariance, v2 oracle agreement, bracket oracle agreement", [&](std::string& detail) {
    Rng rng(606060);
    // 200 (diagram, move) pairs across walked seeds
    std::vector<Diagram> pool = {trefoil_left(), figure_eight(), hopf_positive(), whitehead(),
                                 knot_5_2(), torus_5_1()};
    int pairs = 0;
    while (pairs < 200) {
      Diagram d = walk_diagram(pool[rng.pick(pool.size())], rng, rng.pick(3), 9);
      const auto sites = enumerate_move_sites(d);
      std::vector<MoveSite> usable;
      for (const auto& s : sites) {
        int delta = s.kind == MoveKind::r2_add                                         ? 2
                    : (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) ? 1
                                                                                         : 0;
        if (static_cast<int>(d.crossings.size()) + delta <= 11) usable.push_back(s);
      }
      if (usable.empty()) continue;
      const MoveSite s = usable[rng.pick(usable.size())];
      const Diagram moved = apply_move(d, s);
      if (jones_A(moved) != jones_A(d)) {
        detail = "jones changed under " + move_kind_name(s.kind);
        return false;
      }
      ++pairs;
    }

    // v2 differential test on the bundled table, plus pinned values
    for (const auto& [name, d] : knot_table()) {
      if (d.crossings.size() > 8) continue;
      if (v2_gauss(d) != v2_skein_oracle(d)) {
        detail = "v2 mismatch on " + name;
        return false;
      }
    }
    if (v2_gauss(unknot()) != 0 || v2_skein_oracle(unknot()) != 0) return false;
    if (v2_skein_oracle(trefoil_left()) != 1 || v2_gauss(trefoil_left()) != 1) return false;

    // bracket vs the independent brute-force state sum on small diagrams
    int bracket_checked = 0;
    for (const auto& [name, d] : knot_table()) {
      if (d.crossings.size() > 8) continue;
      if (kauffman_bracket(d) != oracle::bracket_bruteforce(d)) {
        detail = "bracket oracle mismatch on " + name;
        return false;
      }
      ++bracket_checked;
    }
    for (int i = 0; i < 40; ++i) {
      const Diagram d = walk_diagram(pool[rng.pick(pool.size())], rng, rng.pick(4), 8);
      if (kauffman_bracket(d) != oracle::bracket_bruteforce(d)) {
        detail = "bracket oracle mismatch on walked diagram";
        return false;
      }
      ++bracket_checked;
    }
    detail = "200 move pairs, " + std::to_string(bracket_checked) + " bracket checks";
    return true;
  });

  // 7. structural algebra of the loop defect
  criterion(7, "reversal, concatenation, conjugation: 100 exact instances each", [&](std::string& detail) {
    const std::vector<Diagram> seeds = {trefoil_left(), figure_eight(), hopf_positive()};
    const auto jonesplus = *singular_invariant("jonesplus");
    Rng rng(909090);
    for (int i = 0; i < 100; ++i) {
      const Diagram& base = seeds[i % seeds.size()];
      const SingularInvariant& f = (i % 2 == 0) ? d_jones() : jonesplus;
      const HomotopyPath l1 =
          (i % 3 == 0) ? gen_loop_kink(base, rng.next()) : random_commutator(base, rng);
      const RingElem x1 = loop_defect(f, l1);
      // reversal antisymmetry
      if (loop_defect(f, reverse_path(l1)) != -x1) {
        detail = "reversal failed at " + std::to_string(i);
        return false;
      }
      // concatenation additivity
      const HomotopyPath l2 = gen_loop_kink(l1.start, rng.next());
      if (loop_defect(f, concat_paths(l1, l2)) != x1 + loop_defect(f, l2)) {
        detail = "concatenation failed at " + std::to_string(i);
        return false;
      }
      // conjugation invariance
      const HomotopyPath gamma = random_change_path(l1.start, rng, 1 + rng.pick(2));
      if (loop_defect(f, conjugate_loop(reverse_path(gamma), l1)) != x1) {
        detail = "conjugation failed at " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
