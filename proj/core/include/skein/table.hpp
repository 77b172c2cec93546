#pragma once

#include "skein/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Named small diagrams used by corpora and tests.
Diagram unknot();
Diagram unlink(int m);
Diagram trefoil_left();
Diagram figure_eight();
Diagram torus_5_1();
Diagram knot_5_2();
Diagram hopf_positive();
Diagram whitehead();

/// Closure of a braid word on `strands` strands. Word letters are +-j for
/// the generator at positions (j-1, j), 1-based, sign giving the crossing
/// sign. Components follow from the word's permutation.
Diagram braid_closure(int strands, const std::vector<int>& word);

/// Connected sum of two knot diagrams (one component each).
Diagram connected_sum(const Diagram& k1, const Diagram& k2);

/// The bundled knot table (all diagrams with at most 8 crossings, one
/// component, planar): named knots plus assorted braid closures.
const std::vector<std::pair<std::string, Diagram>>& knot_table();

/// Seed diagrams for corpus generation, by name.
Diagram seed_by_name(const std::string& name);
std::vector<std::string> seed_names();

}  // namespace skein
