#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// Error with a machine-readable code plus free-form context.
class SkeinError : public std::runtime_error {
public:
  SkeinError(std::string code, const std::string& message, std::string context = "")
      : std::runtime_error(message + (context.empty() ? "" : " [" + context + "]")),
        code_(std::move(code)),
        context_(std::move(context)) {}
  const std::string& code() const { return code_; }
  const std::string& context() const { return context_; }

private:
  std::string code_;
  std::string context_;
};

enum class CrossingKind { positive, negative, singular };

std::string kind_name(CrossingKind k);
CrossingKind kind_from_name(const std::string& s);

/// One 4-valent vertex of a planar diagram.
///
/// `ends` lists the four incident arc labels counterclockwise. Convention:
///  - signed crossings: ends[0] is the incoming under-strand arc, so
///    ends[2] is the outgoing under-strand. For a positive crossing the
///    over-strand enters at ends[3] and leaves at ends[1]; for a negative
///    crossing it enters at ends[1] and leaves at ends[3].
///  - singular crossings (rigid vertices, no over/under): ends[0] is the
///    lowest-numbered incoming arc; the strand through positions 0/2 runs
///    0 -> 2, and `e3_in` records whether the other strand runs 3 -> 1.
struct Crossing {
  int id = 0;
  CrossingKind kind = CrossingKind::positive;
  std::array<int, 4> ends{};
  bool e3_in = false;  // second-strand direction, meaningful for singular only

  bool is_signed() const { return kind != CrossingKind::singular; }

  /// Is the arc slot at rotational position `pos` an incoming end?
  bool incoming(int pos) const;

  /// Rotate `ends` into the canonical representative (see class comment).
  void normalize();

  bool operator==(const Crossing& o) const;
};

/// Planar-diagram code of an oriented link or singular link.
///
/// Diagrams are immutable values in practice: every operation in the moves /
/// invariants / integrator modules returns a fresh diagram. Crossingless
/// unknot components cannot be expressed by PD crossings and are tracked by
/// the explicit counter.
struct Diagram {
  std::vector<Crossing> crossings;       // sorted by id
  int components = 0;                    // total circles, incl. crossingless
  int arcs = 0;                          // number of arc labels
  int zero_crossing_components = 0;

  int order() const;          // number of singular crossings
  bool is_link() const { return order() == 0; }

  const Crossing& crossing_by_id(int id) const;
  int index_of(int id) const;  // -1 if absent
  int max_crossing_id() const;

  bool operator==(const Diagram& o) const;
};

/// Reference to one transverse double point (a singular crossing) of a diagram.
struct DoublePointRef {
  int crossing_id = 0;
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Structured pass/fail result of a validation or audit.
struct Report {
  bool ok = true;
  std::vector<CheckResult> checks;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

/// One of the four rotational slots of a crossing, identified by the index
/// of the crossing in Diagram::crossings (not its id) and the position.
struct Port {
  int ci = -1;
  int pos = 0;
  bool operator==(const Port& o) const { return ci == o.ci && pos == o.pos; }
  bool operator<(const Port& o) const { return ci != o.ci ? ci < o.ci : pos < o.pos; }
};

/// Combinatorial-map view of a diagram: arc endpoints as ports, the vertex
/// rotation, the edge involution and the induced face structure. All the
/// move-pattern matching and the genus computation run on this view.
class CombMap {
public:
  explicit CombMap(const Diagram& d);

  const Diagram& diagram() const { return *d_; }

  bool has_arc(int arc) const;
  Port out_port(int arc) const;  // where the arc leaves its source crossing
  Port in_port(int arc) const;   // where the arc enters its target crossing

  int arc_at(Port p) const;
  bool incoming(Port p) const;

  Port sigma(Port p) const;  // next slot counterclockwise at the vertex
  Port alpha(Port p) const;  // other end of the same arc

  /// Successor arc along the strand: the arc leaving the crossing that
  /// `arc` enters, through the opposite slot.
  int succ(int arc) const;

  /// Orbits of the arc-succession map; each orbit is one link component,
  /// listed in traversal order starting from its smallest arc label.
  std::vector<std::vector<int>> orbits() const;

  /// Faces of the carrier surface: orbits of sigma(alpha(.)), each rotated
  /// to start at its smallest port. Deterministic order.
  std::vector<std::vector<Port>> faces() const;

  /// Connected components of the underlying 4-valent graph, as sets of
  /// crossing indices.
  std::vector<std::vector<int>> graph_components() const;

private:
  const Diagram* d_;
  std::map<int, Port> out_, in_;
};

// -- diagram-core operations --------------------------------------------

/// Full structural validation: arc pairing, succession consistency with the
/// standard consecutive numbering, component count, sign/orientation
/// coherence. Failures are reported, never thrown.
Report validate(const Diagram& d);

void require_valid(const Diagram& d);           // throws SkeinError("invalid_diagram")
void require_link(const Diagram& d);            // throws if order > 0

/// Number of circles in the source of the diagram.
int count_components(const Diagram& d);

/// Genus of the carrier surface from the rotation system, summed over
/// connected pieces; 0 iff the diagram is classical/planar.
int planarity_genus(const Diagram& d);

/// Sum of crossing signs. Requires a link diagram (no singular crossings).
int writhe(const Diagram& d);

/// Decode a diagram from its JSON document. Errors carry the offending
/// element in the context field.
Diagram parse_pd(const std::string& text);

/// Canonical serialization: fixed key order, crossings sorted by id, no
/// whitespace. parse_pd(serialize(d)) == d for valid diagrams, and
/// serialize(parse_pd(t)) reproduces t up to canonical key ordering.
std::string serialize(const Diagram& d);

/// Canonical arc relabeling: components ordered by their smallest original
/// arc label, then consecutive numbering from 1 along each component.
/// Crossing ids are preserved. Diagram equality after moves is defined as
/// serialization equality of canonically renumbered diagrams.
Diagram canonical_renumber(const Diagram& d);

/// Serialization-like string invariant under arc relabeling, component
/// rotation and crossing re-identification: the minimum over all traversal
/// starts. Used as a cheap isomorphism test on small diagrams.
std::string iso_canonical_string(const Diagram& d);

/// Build a link diagram from bare PD tuples (each counterclockwise from the
/// incoming under-strand, standard table convention). Crossing signs are
/// derived from the arc numbering; ids are assigned 0..n-1 in order.
Diagram from_pd_tuples(const std::vector<std::array<int, 4>>& tuples,
                       int zero_crossing_components = 0);

/// Mirror image: over/under swapped at every crossing (signed diagrams).
Diagram mirror(const Diagram& d);

}  // namespace skein
