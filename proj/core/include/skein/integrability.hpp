#pragma once

#include "skein/diagram.hpp"
#include "skein/invariants.hpp"
#include "skein/serde.hpp"

#include <cstdint>
#include <vector>

namespace skein {

struct CorpusParams {
  int count = 10;
  int walk_length = 4;
  int max_crossings = 10;
  std::uint64_t seed = 1;
};

struct CorpusItem {
  Diagram diagram;
  std::vector<int> points;  // ids of the tracked double points
  int seed_index = 0;
};

/// Reproducible family of singular diagrams: seeds walked by random moves,
/// then singularized. Regeneration from (seeds, params) is exact.
struct Corpus {
  std::string kind;  // "kink" | "order2"
  CorpusParams params;
  std::vector<Diagram> seeds;
  std::vector<CorpusItem> items;
};

/// Order-1 kinked diagrams: walk, add a curl, make it singular. Every item
/// is certified by is_kink.
Corpus gen_kink_corpus(const std::vector<Diagram>& seeds, const CorpusParams& params);

/// Order-2 diagrams with both double points tracked by id.
Corpus gen_order2_corpus(const std::vector<Diagram>& seeds, const CorpusParams& params);

struct ConditionFailure {
  int index = 0;
  Diagram diagram;
  RingElem lhs;
  RingElem rhs;  // zero for condition (1)
};

struct ConditionReport {
  std::string condition;  // "kink" | "commutation"
  std::string invariant;
  int items = 0;
  std::vector<ConditionFailure> failures;
  // items whose evaluation errored (external invariant crash, timeout, ...);
  // their presence marks the report as partial
  std::vector<std::pair<int, std::string>> errors;
  bool passed = true;
};

/// Condition (1): f vanishes on every certified kink.
ConditionReport check_condition1(const SingularInvariant& f, const Corpus& corpus);

/// Condition (2): resolving either double point first gives the same
/// difference. Run for both labelings of the pair.
ConditionReport check_condition2(const SingularInvariant& f, const Corpus& corpus);

Json corpus_to_json(const Corpus& c);
Corpus corpus_from_json(const Json& j);
Json condition_report_to_json(const ConditionReport& r);

}  // namespace skein
