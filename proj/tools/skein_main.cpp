// skein: exact calculus for singular link diagrams in PD code.
//
// Subcommands operate on JSON documents and emit JSON reports. Exit status:
// 0 success / check passed, 1 check failed (report still emitted), 2 usage
// or input error (a {code, message, context} object is emitted).

#include <CLI11.hpp>

#include "external_bridge.hpp"
#include "skein/integrability.hpp"
#include "skein/integrator.hpp"
#include "skein/invariants.hpp"
#include "skein/moves.hpp"
#include "skein/rng.hpp"
#include "skein/serde.hpp"
#include "skein/table.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace {

using namespace skein;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SkeinError("io_error", "cannot open input file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw SkeinError("io_error", "cannot open output file", out_path);
  out << j.dump() << "\n";
}

int default_budget() {
  if (const char* env = std::getenv("SKEIN_BUDGET_DEFAULT")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw SkeinError("bad_argument", "SKEIN_BUDGET_DEFAULT is not a number", env);
    }
  }
  return 20000;
}

Diagram load_diagram(const std::string& path) { return parse_pd(read_file(path)); }

SingularInvariant pick_singular(const std::string& name, const std::string& external_cmd,
                                std::shared_ptr<ExternalInvariant>& keep_alive) {
  if (!external_cmd.empty()) {
    keep_alive = std::make_shared<ExternalInvariant>(external_cmd);
    auto f = keep_alive->as_invariant(name.empty() ? "external" : name);
    auto held = keep_alive;  // keep the child alive inside the closure
    f.eval = [held](const Diagram& d) { return held->eval(d); };
    return f;
  }
  auto f = singular_invariant(name);
  if (!f) throw SkeinError("no_such_invariant", "unknown singular invariant", name);
  return *f;
}

// integration constants for the registry's derived invariants: F on unlinks
std::map<int, RingElem> auto_base(const std::string& fname, int components) {
  std::map<int, RingElem> base;
  if (fname.rfind("d_", 0) == 0) {
    auto F = link_invariant(fname.substr(2));
    if (F) {
      base[components] = F->eval(unlink(components));
      return base;
    }
  }
  throw SkeinError("missing_base",
                   "this invariant needs --base with integration constants", fname);
}

std::map<int, RingElem> parse_base(const std::string& path) {
  const Json j = Json::parse(read_file(path));
  std::map<int, RingElem> base;
  for (auto it = j.begin(); it != j.end(); ++it)
    base[std::stoi(it.key())] = ring_from_json(it.value());
  return base;
}

std::vector<Diagram> load_seeds(const std::string& spec) {
  std::vector<Diagram> seeds;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) seeds.push_back(seed_by_name(name));
  if (seeds.empty()) throw SkeinError("bad_argument", "no seeds named", spec);
  return seeds;
}

int cmd_validate(const std::string& in, const std::string& out) {
  const Diagram d = load_diagram(in);
  const Report r = validate(d);
  Json j;
  j["command"] = "validate";
  j["ok"] = r.ok;
  j["report"] = report_to_json(r);
  emit(j, out);
  return r.ok ? 0 : 1;
}

int cmd_resolve(const std::string& in, int crossing, const std::string& sign,
                const std::string& out) {
  const Diagram d = load_diagram(in);
  ResolutionSign s;
  if (sign == "plus")
    s = ResolutionSign::plus;
  else if (sign == "minus")
    s = ResolutionSign::minus;
  else if (sign == "zero")
    s = ResolutionSign::zero;
  else
    throw SkeinError("bad_argument", "sign must be plus, minus or zero", sign);
  emit(diagram_to_json(resolve(d, {crossing}, s)), out);
  return 0;
}

int cmd_invariant(const std::string& name, const std::string& in, const std::string& out) {
  const Diagram d = load_diagram(in);
  RingElem value;
  if (name == "bracket") {
    value = kauffman_bracket(d);
  } else {
    auto F = link_invariant(name);
    if (!F) throw SkeinError("no_such_invariant", "unknown link invariant", name);
    value = F->eval(d);
  }
  Json j;
  j["command"] = "invariant";
  j["invariant"] = name;
  j["value"] = ring_to_json(value);
  j["pretty"] = value.str();
  emit(j, out);
  return 0;
}

int cmd_derive(const std::string& name, const std::string& in, const std::string& out) {
  const Diagram d = load_diagram(in);
  auto F = link_invariant(name);
  if (!F) throw SkeinError("no_such_invariant", "unknown link invariant", name);
  const SingularInvariant f = derive_singular(*F);
  const RingElem value = f.eval(d);
  Json j;
  j["command"] = "derive";
  j["invariant"] = f.name;
  j["value"] = ring_to_json(value);
  j["pretty"] = value.str();
  emit(j, out);
  return 0;
}

int cmd_check_local(const std::string& condition, const std::string& corpus_path,
                    const std::string& invariant, const std::string& external_cmd,
                    const std::string& out) {
  const Corpus corpus = corpus_from_json(Json::parse(read_file(corpus_path)));
  if ((condition == "kink") != (corpus.kind == "kink"))
    throw SkeinError("bad_corpus", "corpus kind does not fit the condition", corpus.kind);
  std::shared_ptr<ExternalInvariant> keep;
  const SingularInvariant f = pick_singular(invariant, external_cmd, keep);
  ConditionReport r;
  if (condition == "kink")
    r = check_condition1(f, corpus);
  else if (condition == "commutation")
    r = check_condition2(f, corpus);
  else
    throw SkeinError("bad_argument", "condition must be kink or commutation", condition);
  Json j = condition_report_to_json(r);
  j["command"] = "check-local";
  emit(j, out);
  return r.passed ? 0 : 1;
}

int cmd_integrate(const std::string& invariant, const std::string& in,
                  const std::string& base_path, int budget, const std::string& out) {
  const Diagram d = load_diagram(in);
  std::shared_ptr<ExternalInvariant> keep;
  const SingularInvariant f = pick_singular(invariant, "", keep);
  const int m = count_components(d);
  const std::map<int, RingElem> base =
      base_path.empty() ? auto_base(f.name, m) : parse_base(base_path);
  const RingElem value = integrate(f, d, base, budget);
  Json j;
  j["command"] = "integrate";
  j["invariant"] = f.name;
  j["components"] = m;
  j["value"] = ring_to_json(value);
  j["pretty"] = value.str();
  emit(j, out);
  return 0;
}

int cmd_audit_loop(const std::string& invariant, const std::string& external_cmd,
                   const std::string& loop_path, const std::string& out) {
  const HomotopyPath loop = path_from_json(Json::parse(read_file(loop_path)));
  std::shared_ptr<ExternalInvariant> keep;
  const SingularInvariant f = pick_singular(invariant, external_cmd, keep);
  const ReplayResult rr = replay(loop);
  const RingElem x = loop_defect(f, loop);
  Json j;
  j["command"] = "audit-loop";
  j["invariant"] = f.name;
  j["events"] = loop.events.size();
  Json evs = Json::array();
  for (const auto& ev : rr.singular_events) {
    Json e;
    e["event_index"] = ev.event_index;
    e["crossing"] = ev.crossing;
    e["epsilon"] = ev.epsilon;
    evs.push_back(std::move(e));
  }
  j["singular_events"] = std::move(evs);
  j["defect"] = ring_to_json(x);
  j["pretty"] = x.str();
  j["zero"] = x.is_zero();
  emit(j, out);
  return x.is_zero() ? 0 : 1;
}

int cmd_gen_loop(const std::string& kind, const std::string& in, std::uint64_t seed, int c1,
                 int c2, const std::string& out) {
  const Diagram d = load_diagram(in);
  HomotopyPath loop;
  if (kind == "kink") {
    loop = gen_loop_kink(d, seed);
  } else if (kind == "commutator") {
    if (c1 < 0 || c2 < 0) {
      // pick two distinct signed crossings with the seed
      std::vector<int> ids;
      for (const auto& c : d.crossings)
        if (c.is_signed()) ids.push_back(c.id);
      if (ids.size() < 2)
        throw SkeinError("bad_argument", "commutator loop needs two signed crossings");
      Rng rng(seed);
      const int a = static_cast<int>(rng.pick(ids.size()));
      int b = static_cast<int>(rng.pick(ids.size() - 1));
      if (b >= a) ++b;
      c1 = ids[a];
      c2 = ids[b];
    }
    loop = gen_loop_commutator(d, c1, c2);
  } else {
    throw SkeinError("bad_argument", "loop kind must be kink or commutator", kind);
  }
  emit(path_to_json(loop), out);
  return 0;
}

int cmd_path_independence(const std::string& invariant, const std::string& external_cmd,
                          const std::string& in, int paths, std::uint64_t seed,
                          const std::string& out) {
  const Diagram d = load_diagram(in);
  (void)default_budget();
  std::shared_ptr<ExternalInvariant> keep;
  const SingularInvariant f = pick_singular(invariant, external_cmd, keep);
  const PathIndependenceReport rep = path_independence_report(f, d, paths, seed);
  Json j;
  j["command"] = "path-independence";
  j["invariant"] = f.name;
  j["paths"] = rep.paths;
  j["seed"] = rep.seed;
  Json vals = Json::array();
  for (const auto& v : rep.values) vals.push_back(ring_to_json(v));
  j["values"] = std::move(vals);
  j["all_equal"] = rep.all_equal;
  emit(j, out);
  return rep.all_equal ? 0 : 1;
}

int cmd_gen_corpus(const std::string& kind, int count, int walk, int max_crossings,
                   std::uint64_t seed, const std::string& seeds_spec, const std::string& out) {
  CorpusParams p;
  p.count = count;
  p.walk_length = walk;
  p.max_crossings = max_crossings;
  p.seed = seed;
  const std::vector<Diagram> seeds = load_seeds(seeds_spec);
  Corpus c;
  if (kind == "kink")
    c = gen_kink_corpus(seeds, p);
  else if (kind == "order2")
    c = gen_order2_corpus(seeds, p);
  else
    throw SkeinError("bad_argument", "corpus kind must be kink or order2", kind);
  emit(corpus_to_json(c), out);
  return 0;
}

int cmd_serve(const std::string& invariant) {
  auto f = singular_invariant(invariant);
  if (!f) throw SkeinError("no_such_invariant", "unknown singular invariant", invariant);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    try {
      const Diagram d = parse_pd(line);
      std::cout << ring_to_json(f->eval(d)).dump() << "\n" << std::flush;
    } catch (const SkeinError& e) {
      Json err;
      err["error"] = e.code();
      err["message"] = e.what();
      std::cout << err.dump() << "\n" << std::flush;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein: exact calculus for singular link diagrams"};
  app.require_subcommand(1);

  std::string in, out, invariant, external_cmd, corpus, condition, sign, base, loop, seeds;
  int crossing = 0, paths = 3, budget = 0, count = 20, walk = 4, maxc = 10;
  int c1 = -1, c2 = -1;
  std::uint64_t seed = 1;
  seeds = "unknot,trefoil,figure_eight,hopf";

  std::function<int()> run;

  auto* v = app.add_subcommand("validate", "structural checks for a diagram document");
  v->add_option("--in", in, "diagram JSON")->required();
  v->add_option("--out", out, "write the report here instead of stdout");
  v->callback([&] { run = [&] { return cmd_validate(in, out); }; });

  auto* rs = app.add_subcommand("resolve", "resolve one double point");
  rs->add_option("--in", in)->required();
  rs->add_option("--crossing", crossing, "singular crossing id")->required();
  rs->add_option("--sign", sign, "plus | minus | zero")->required();
  rs->add_option("--out", out);
  rs->callback([&] { run = [&] { return cmd_resolve(in, crossing, sign, out); }; });

  auto* iv = app.add_subcommand("invariant", "evaluate a link invariant");
  iv->add_option("--invariant", invariant)->required();
  iv->add_option("--in", in)->required();
  iv->add_option("--out", out);
  iv->callback([&] { run = [&] { return cmd_invariant(invariant, in, out); }; });

  auto* dv = app.add_subcommand("derive", "evaluate F(L+) - F(L-) on an order-1 diagram");
  dv->add_option("--invariant", invariant, "link invariant to differentiate")->required();
  dv->add_option("--in", in)->required();
  dv->add_option("--out", out);
  dv->callback([&] { run = [&] { return cmd_derive(invariant, in, out); }; });

  auto* cl = app.add_subcommand("check-local", "check a local integrability condition");
  cl->add_option("--condition", condition, "kink | commutation")->required();
  cl->add_option("--corpus", corpus, "corpus JSON")->required();
  cl->add_option("--invariant", invariant, "built-in name, or a label with --external-cmd");
  cl->add_option("--external-cmd", external_cmd, "child command implementing the invariant");
  cl->add_option("--out", out);
  cl->callback([&] {
    run = [&] { return cmd_check_local(condition, corpus, invariant, external_cmd, out); };
  });

  auto* ig = app.add_subcommand("integrate", "integrate a singular invariant on a diagram");
  ig->add_option("--invariant", invariant)->required();
  ig->add_option("--in", in)->required();
  ig->add_option("--base", base, "integration constants JSON (component count -> value)");
  ig->add_option("--budget", budget, "simplification budget");
  ig->add_option("--out", out);
  ig->callback([&] {
    run = [&] {
      return cmd_integrate(invariant, in, base, budget > 0 ? budget : default_budget(), out);
    };
  });

  auto* al = app.add_subcommand("audit-loop", "loop defect of a closed path");
  al->add_option("--invariant", invariant);
  al->add_option("--external-cmd", external_cmd);
  al->add_option("--loop", loop, "path JSON whose replay closes")->required();
  al->add_option("--out", out);
  al->callback([&] { run = [&] { return cmd_audit_loop(invariant, external_cmd, loop, out); }; });

  auto* gl = app.add_subcommand("gen-loop", "generate a kink or commutator loop");
  static std::string loop_kind;
  gl->add_option("kind", loop_kind, "kink | commutator")->required();
  gl->add_option("--in", in, "start diagram")->required();
  gl->add_option("--seed", seed);
  gl->add_option("--c1", c1, "first crossing id (commutator)");
  gl->add_option("--c2", c2, "second crossing id (commutator)");
  gl->add_option("--out", out);
  gl->callback([&] { run = [&] { return cmd_gen_loop(loop_kind, in, seed, c1, c2, out); }; });

  auto* pi = app.add_subcommand("path-independence", "compare integrals over several paths");
  pi->add_option("--invariant", invariant);
  pi->add_option("--external-cmd", external_cmd);
  pi->add_option("--in", in)->required();
  pi->add_option("--paths", paths, "number of paths (k >= 2)");
  pi->add_option("--seed", seed);
  pi->add_option("--out", out);
  pi->callback([&] {
    run = [&] { return cmd_path_independence(invariant, external_cmd, in, paths, seed, out); };
  });

  auto* gc = app.add_subcommand("gen-corpus", "generate a reproducible singular corpus");
  static std::string corpus_kind;
  gc->add_option("--kind", corpus_kind, "kink | order2")->required();
  gc->add_option("--count", count);
  gc->add_option("--walk", walk, "random move walk length");
  gc->add_option("--max-crossings", maxc);
  gc->add_option("--seed", seed);
  gc->add_option("--seeds", seeds, "comma-separated seed diagram names");
  gc->add_option("--out", out);
  gc->callback([&] {
    run = [&] { return cmd_gen_corpus(corpus_kind, count, walk, maxc, seed, seeds, out); };
  });

  auto* sv = app.add_subcommand("serve-invariant",
                                "line protocol: diagram JSON in, ring JSON out");
  sv->add_option("--invariant", invariant)->required();
  sv->callback([&] { run = [&] { return cmd_serve(invariant); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const SkeinError& e) {
    Json err;
    err["code"] = e.code();
    err["message"] = e.what();
    err["context"] = e.context();
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["code"] = "internal";
    err["message"] = e.what();
    err["context"] = "";
    std::cout << err.dump() << "\n";
    return 2;
  }
}
