#pragma once

/**
 * @file engine.hpp
 * @brief Leading-term calculus for branched cyclic covers of decorated knots.
 *
 * Each leg of a complete decoration is resolved into two states: epsilon = 0
 * (sawn off) and epsilon = 1 (sawn off with one extra wrap around the knot),
 * the second entering with a minus sign. A leg state contributes p copies of
 * the sawn-off term exactly when every cycle of the graph winds around the
 * knot a multiple of p times, and nothing otherwise. Summing gives
 *
 *   multiplier(d, p) = p * sum_{eps in {0,1}^L} (-1)^{|eps|} [all windings = 0 mod p].
 *
 * The same number is the mod-p indicator sum of the leg-state polynomial
 *
 *   F'(t_c) = prod_c t_c^{const_c} * prod_legs (1 - prod_c t_c^{coef_{c,leg}}),
 *
 * and multiplier() evaluates both and insists that they agree.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyclo/covers.hpp"
#include "cyclo/diagrams.hpp"
#include "cyclo/lifts.hpp"
#include "cyclo/polyring.hpp"

namespace cyclo {

// alternating carries (-1)^{|eps|}; unsigned_sum drops it, reproducing the
// unsigned leg-state polynomial for comparison.
enum class LegSigns { alternating, unsigned_sum };

struct MultiplierOptions {
  LegSigns signs = LegSigns::alternating;
  int leg_cap = 24;
};

// Thrown when a diagram has more legs than MultiplierOptions::leg_cap.
struct LegCapExceeded : std::length_error {
  using std::length_error::length_error;
};

// The leg-state polynomial F' in variables t0, t1, ... (one per basis cycle).
LaurentPoly leg_state_polynomial(const DecoratedDiagram& d,
                                 const CycleBasis& basis, LegSigns signs);

// Direct 2^L enumeration of leg states.
Integer multiplier_by_enumeration(const DecoratedDiagram& d, std::int64_t p,
                                  const MultiplierOptions& opts = {});

// p * modp_indicator_sum(F', p).
Integer multiplier_by_indicator(const DecoratedDiagram& d, std::int64_t p,
                                const MultiplierOptions& opts = {});

// Validates d, computes both routes and throws std::logic_error if they
// disagree.
Integer multiplier(const DecoratedDiagram& d, std::int64_t p,
                   const MultiplierOptions& opts = {});

// The lift system of the graph at one leg state: every edge offset is its
// base winding plus the wraps of the legs in state 1 that target it. Bit i
// of `state` is the state of the i-th leg in increasing id order.
LiftSystem lift_system_for_state(const DecoratedDiagram& d, std::uint64_t state,
                                 std::int64_t p);

enum class Sign { plus, minus, unknown };

const char* to_string(Sign s);

struct LeadingTerm {
  Integer magnitude;
  Sign sign = Sign::unknown;
  int grade = 0;
  std::string label;
  std::int64_t p = 1;
  std::string note;
};

// Change in the Casson-Walker-Lescop invariant of the p-fold cover when
// the knot is decorated by a theta graph with legs:
//
//   magnitude = 2 * |H_1(Sigma^p_K)| * |multiplier(d, p)|.
//
// A legless admissible theta gives 2p|H_1|. Diagrams whose sawn graph is not
// a theta give magnitude 0 with an explanatory note. The sign is reported
// only when d carries a twist on every edge, relative to the same graph with
// all twists +1; otherwise it is unknown.
LeadingTerm cwl_delta(const KnotDescriptor& knot, const DecoratedDiagram& d,
                      std::int64_t p, const MultiplierOptions& opts = {});

// sum_{q=0}^{p-1} (1 - w^q)^l, exactly.
Integer lmo_leading_multiplier(int l, std::int64_t p);

struct WindowWitness {
  bool vacuous = false;  // p == 1: every window is trivially zero
  int l = 0;
  Integer value;
};

// First l' in [l_start, l_start + p) with lmo_leading_multiplier(l', p) != 0.
// A window with no such l' is impossible for p >= 2 and raises
// std::logic_error.
WindowWitness window_nonzero(int l_start, std::int64_t p);

}  // namespace cyclo
