#pragma once

/**
 * @file diagrams.hpp
 * @brief Complete graph Y-link decorations as combinatorial data.
 *
 * A decoration is a trivalent graph whose legs grab the knot. Each leg sits
 * at its own attachment vertex (the completeness condition), so a vertex
 * carrying a leg has exactly two edge ends. Every edge carries the signed
 * intersection count of that edge with a Seifert surface (its base
 * winding). A leg in state 1 adds one extra wrap of sign `sign` to its
 * target edge.
 *
 * Multi-edges and self-loops are allowed. Twists default to +1 per edge;
 * the map only holds explicitly supplied values.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclo {

struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::int64_t winding = 0;
};

struct Leg {
  int id = 0;
  int vertex = 0;
  int sign = 1;   // wrap sign, +1 or -1
  int edge = 0;   // target edge, incident to `vertex`
};

struct DecoratedDiagram {
  std::string label;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;
  std::map<int, int> twists;

  const Edge* find_edge(int id) const;
  // Explicit twist or the default +1.
  int twist(int edge_id) const;
  // True when every edge has an explicitly supplied twist.
  bool has_full_twist_data() const;
};

enum class ViolationKind {
  duplicate_id,
  unknown_vertex,
  unknown_edge,
  bad_leg_sign,
  bad_twist,
  leg_target_not_incident,
  fork,
  chord,
  not_trivalent,
  disconnected,
  surplus_too_small,
};

enum class ElementKind { diagram, vertex, edge, leg };

struct Violation {
  ViolationKind kind;
  ElementKind element;
  int element_id = 0;
  std::string message;
};

const char* to_string(ViolationKind kind);
const char* to_string(ElementKind kind);
// "violation <kind> at <element> <id>: <message>"
std::string format_violation(const Violation& v);

// Checks the diagram invariants (unique ids, resolvable references, no
// forks, no chords, trivalence, connectivity) and surplus >= 2. Returns
// the first violation found, in that order.
std::optional<Violation> validate_complete(const DecoratedDiagram& d);

// Trivalent vertices minus univalent ones: |vertices| - |legs|.
int surplus(const DecoratedDiagram& d);

// Half the number of vertices of the dashed graph: (|vertices| + |legs|)/2.
mpq_class degree(const DecoratedDiagram& d);

struct Cycle {
  int id = 0;
  std::map<int, int> incidence;  // edge id -> +-1
};

struct CycleBasis {
  std::vector<Cycle> cycles;
};

// Fundamental cycles of the spanning tree built greedily over edges in
// increasing id order. Cycle ids are 0, 1, ... in the order of the
// non-tree edges that close them. Throws ValidationError if disconnected.
CycleBasis cycle_basis(const DecoratedDiagram& d);

// Same, with edges offered to the spanning tree in the given order.
CycleBasis cycle_basis(const DecoratedDiagram& d,
                       std::span<const int> edge_priority);

struct AffineWinding {
  int cycle_id = 0;
  std::int64_t constant = 0;
  std::map<int, int> leg_coefficients;  // leg id -> -1 / +1, zeros omitted
};

// Winding of each basis cycle around the knot as an affine function of the
// leg states epsilon in {0,1}.
std::vector<AffineWinding> cycle_winding_affine(const DecoratedDiagram& d,
                                                const CycleBasis& basis);

// The graph left after removing every leg and smoothing its attachment
// vertex, so each maximal chain of leg vertices becomes a single edge.
struct SawnGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // endpoints
  int closed_chains = 0;  // chains of leg vertices with no trivalent end
};

SawnGraph sawn_graph(const DecoratedDiagram& d);

// Two vertices, three edges, no self-loops.
bool is_theta(const SawnGraph& g);

}  // namespace cyclo
