#pragma once

#include "skein/diagram.hpp"
#include "skein/ring.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace skein {

/// A named total function on link diagrams with its invariance certificate.
struct LinkInvariant {
  std::string name;
  enum class Certificate { proven_by_construction, test_verified } certificate =
      Certificate::test_verified;
  std::function<RingElem(const Diagram&)> eval;
};

/// A named function on order-1 singular diagrams.
struct SingularInvariant {
  std::string name;
  std::function<RingElem(const Diagram&)> eval;
};

/// Loop value of the bracket state sum: -A^2 - A^-2.
RingElem bracket_delta();

/// Kauffman bracket by the 2^n state sum, <unknot> = 1, each extra
/// crossingless component contributing one delta factor. Requires a link
/// diagram of genus 0 with at most `crossing_cap` crossings.
RingElem kauffman_bracket(const Diagram& d, int crossing_cap = 14);

/// (-A)^(-3 writhe) <d>: the Kauffman-normalized Jones invariant in the A
/// variable. Reidemeister-invariant.
RingElem jones_A(const Diagram& d, int crossing_cap = 14);

/// jones_A of the m-component crossingless unlink.
RingElem unlink_jones(int m);

/// Degree-2 finite-type invariant of a knot by the Gauss-diagram pair count,
/// averaged over all basepoints (the average is asserted to be integral).
long v2_gauss(const Diagram& d);

/// Independent oracle for v2: the z^2 coefficient of the Conway polynomial,
/// computed by the skein recursion C(L+) - C(L-) = z C(L0) with memoized
/// simplification. `budget` bounds the recursion tree.
long v2_skein_oracle(const Diagram& d, int budget = 200000);

/// Full Conway polynomial in z (exponents are z-degrees).
RingElem conway_polynomial(const Diagram& d, int budget = 200000);

/// f(Lx) = F(L+) - F(L-), the derived singular invariant of Eq-style
/// differentiation. Total whenever F is total on the resolutions.
SingularInvariant derive_singular(const LinkInvariant& F);

/// Shipped link invariants: "jones", "const1", "v2x0" (v2 on knots,
/// zero on multi-component diagrams).
const std::vector<LinkInvariant>& link_invariants();
std::optional<LinkInvariant> link_invariant(const std::string& name);

/// Shipped singular invariants: the derived "d_jones", "d_const1", "d_v2x0",
/// plus the negative controls "jonesplus" (jones of the positive resolution
/// only) and "const1s".
const std::vector<SingularInvariant>& singular_invariants();
std::optional<SingularInvariant> singular_invariant(const std::string& name);

/// Smoothing of one signed crossing, A-type or B-type, with component
/// orientations re-chosen so the result is again an oriented diagram.
/// Supports the bracket's defining local relation check.
Diagram smooth_crossing(const Diagram& d, int crossing_id, bool a_type);

}  // namespace skein
