#include "skein/integrability.hpp"

#include "skein/moves.hpp"
#include "skein/rng.hpp"

#include <algorithm>

namespace skein {

namespace {

// one random applicable move, keeping the diagram planar-small
Diagram walk_step(const Diagram& d, Rng& rng, int max_crossings) {
  std::vector<MoveSite> usable;
  const int n = static_cast<int>(d.crossings.size());
  for (const auto& s : enumerate_move_sites(d)) {
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
  if (usable.empty()) return d;
  return apply_move(d, usable[rng.pick(usable.size())]);
}

Diagram walk(const Diagram& seed, Rng& rng, int steps, int max_crossings) {
  Diagram d = canonical_renumber(seed);
  for (int i = 0; i < steps; ++i) d = walk_step(d, rng, max_crossings);
  return d;
}

// normalize through the serialized form so a reloaded corpus behaves
// identically to the freshly generated one
Diagram normalized(const Diagram& d) { return parse_pd(serialize(d)); }

std::vector<int> signed_crossing_ids(const Diagram& d) {
  std::vector<int> ids;
  for (const auto& c : d.crossings)
    if (c.is_signed()) ids.push_back(c.id);
  return ids;
}

}  // namespace

Corpus gen_kink_corpus(const std::vector<Diagram>& seeds, const CorpusParams& params) {
  if (seeds.empty()) throw SkeinError("bad_argument", "corpus needs seed diagrams");
  Corpus corpus;
  corpus.kind = "kink";
  corpus.params = params;
  corpus.seeds = seeds;
  Rng rng(params.seed);
  for (int i = 0; i < params.count; ++i) {
    const int si = i % static_cast<int>(seeds.size());
    Diagram d = walk(seeds[si], rng, params.walk_length, params.max_crossings - 1);
    // add a curl at a random site, then make the new crossing singular
    std::vector<MoveSite> curls;
    for (const auto& s : enumerate_move_sites(d))
      if (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) curls.push_back(s);
    const MoveSite site = curls[rng.pick(curls.size())];
    Diagram curled = apply_move(d, site);
    const int curl_id = curled.max_crossing_id();
    Diagram item = normalized(make_singular(curled, curl_id));
    if (is_kink(item, {curl_id}, 1) != Verdict::yes)
      throw SkeinError("internal", "generated kink failed certification");
    corpus.items.push_back({std::move(item), {curl_id}, si});
  }
  return corpus;
}

Corpus gen_order2_corpus(const std::vector<Diagram>& seeds, const CorpusParams& params) {
  if (seeds.empty()) throw SkeinError("bad_argument", "corpus needs seed diagrams");
  if (params.max_crossings < 2)
    throw SkeinError("bad_argument", "order-2 corpus needs room for two crossings");
  Corpus corpus;
  corpus.kind = "order2";
  corpus.params = params;
  corpus.seeds = seeds;
  Rng rng(params.seed);
  for (int i = 0; i < params.count; ++i) {
    const int si = i % static_cast<int>(seeds.size());
    Diagram d = walk(seeds[si], rng, params.walk_length, params.max_crossings);
    // guarantee at least two signed crossings to singularize
    while (static_cast<int>(signed_crossing_ids(d).size()) < 2) {
      std::vector<MoveSite> curls;
      for (const auto& s : enumerate_move_sites(d))
        if (s.kind == MoveKind::r1_add_pos || s.kind == MoveKind::r1_add_neg) curls.push_back(s);
      d = apply_move(d, curls[rng.pick(curls.size())]);
    }
    auto ids = signed_crossing_ids(d);
    const int a = static_cast<int>(rng.pick(ids.size()));
    int b = static_cast<int>(rng.pick(ids.size() - 1));
    if (b >= a) ++b;
    Diagram item = normalized(make_singular(make_singular(d, ids[a]), ids[b]));
    corpus.items.push_back({std::move(item), {ids[a], ids[b]}, si});
  }
  return corpus;
}

ConditionReport check_condition1(const SingularInvariant& f, const Corpus& corpus) {
  ConditionReport r;
  r.condition = "kink";
  r.invariant = f.name;
  r.items = static_cast<int>(corpus.items.size());
  for (int i = 0; i < r.items; ++i) {
    try {
      const RingElem v = f.eval(corpus.items[i].diagram);
      if (!v.is_zero()) r.failures.push_back({i, corpus.items[i].diagram, v, RingElem()});
    } catch (const SkeinError& e) {
      r.errors.push_back({i, e.code()});
    }
  }
  r.passed = r.failures.empty() && r.errors.empty();
  return r;
}

ConditionReport check_condition2(const SingularInvariant& f, const Corpus& corpus) {
  ConditionReport r;
  r.condition = "commutation";
  r.invariant = f.name;
  r.items = static_cast<int>(corpus.items.size());
  for (int i = 0; i < r.items; ++i) {
    const CorpusItem& item = corpus.items[i];
    if (item.points.size() != 2)
      throw SkeinError("bad_corpus", "condition (2) needs two tracked double points");
    // both labelings of the pair must agree
    try {
      for (int lab = 0; lab < 2; ++lab) {
        const int p = item.points[lab];
        const int q = item.points[1 - lab];
        const RingElem lhs = f.eval(resolve(item.diagram, {q}, ResolutionSign::plus)) -
                             f.eval(resolve(item.diagram, {q}, ResolutionSign::minus));
        const RingElem rhs = f.eval(resolve(item.diagram, {p}, ResolutionSign::plus)) -
                             f.eval(resolve(item.diagram, {p}, ResolutionSign::minus));
        if (lhs != rhs) {
          r.failures.push_back({i, item.diagram, lhs, rhs});
          break;
        }
      }
    } catch (const SkeinError& e) {
      r.errors.push_back({i, e.code()});
    }
  }
  r.passed = r.failures.empty() && r.errors.empty();
  return r;
}

Json corpus_to_json(const Corpus& c) {
  Json j;
  j["format"] = "corpus-v1";
  j["kind"] = c.kind;
  j["params"] = {{"count", c.params.count},
                 {"walk_length", c.params.walk_length},
                 {"max_crossings", c.params.max_crossings},
                 {"seed", c.params.seed}};
  Json seeds = Json::array();
  for (const auto& s : c.seeds) seeds.push_back(diagram_to_json(s));
  j["seeds"] = std::move(seeds);
  Json items = Json::array();
  for (const auto& it : c.items) {
    Json ij;
    ij["diagram"] = diagram_to_json(it.diagram);
    ij["points"] = it.points;
    ij["seed_index"] = it.seed_index;
    items.push_back(std::move(ij));
  }
  j["items"] = std::move(items);
  return j;
}

Corpus corpus_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("format") || j["format"] != "corpus-v1")
    throw SkeinError("bad_field", "not a corpus-v1 document");
  Corpus c;
  c.kind = j.at("kind").get<std::string>();
  const auto& p = j.at("params");
  c.params.count = p.at("count").get<int>();
  c.params.walk_length = p.at("walk_length").get<int>();
  c.params.max_crossings = p.at("max_crossings").get<int>();
  c.params.seed = p.at("seed").get<std::uint64_t>();
  for (const auto& s : j.at("seeds")) c.seeds.push_back(parse_pd(s.dump()));
  for (const auto& ij : j.at("items")) {
    CorpusItem item;
    item.diagram = parse_pd(ij.at("diagram").dump());
    item.points = ij.at("points").get<std::vector<int>>();
    item.seed_index = ij.value("seed_index", 0);
    c.items.push_back(std::move(item));
  }
  return c;
}

Json condition_report_to_json(const ConditionReport& r) {
  Json j;
  j["condition"] = r.condition;
  j["invariant"] = r.invariant;
  j["items"] = r.items;
  j["passed"] = r.passed;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["index"] = f.index;
    fj["diagram"] = diagram_to_json(f.diagram);
    fj["lhs"] = ring_to_json(f.lhs);
    fj["rhs"] = ring_to_json(f.rhs);
    fails.push_back(std::move(fj));
  }
  j["failures"] = std::move(fails);
  if (!r.errors.empty()) {
    j["partial"] = true;
    Json errs = Json::array();
    for (const auto& [index, code] : r.errors)
      errs.push_back(Json{{"index", index}, {"error", code}});
    j["errors"] = std::move(errs);
  }
  return j;
}

}  // namespace skein
