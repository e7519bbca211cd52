#pragma once

// Hand-built diagrams shared by the unit and acceptance suites.

#include <cstdint>
#include <string>

#include "cyclo/diagrams.hpp"

namespace cyclo::testing {

// Legless theta: vertices 0, 1 and edges 0, 1, 2 all oriented 0 -> 1.
// Basis cycles are e1 - e0 and e2 - e0.
inline DecoratedDiagram theta(std::int64_t w0 = 0, std::int64_t w1 = 0,
                              std::int64_t w2 = 0) {
  DecoratedDiagram d;
  d.label = "theta";
  d.vertices = {0, 1};
  d.edges = {{0, 0, 1, w0}, {1, 0, 1, w1}, {2, 0, 1, w2}};
  return d;
}

// Theta with one leg at vertex 2, which subdivides edge 2 into 2 and 3.
inline DecoratedDiagram theta_one_leg() {
  DecoratedDiagram d;
  d.label = "theta-one-leg";
  d.vertices = {0, 1, 2};
  d.edges = {{0, 0, 1, 0}, {1, 0, 1, 0}, {2, 0, 2, 0}, {3, 2, 1, 0}};
  d.legs = {{0, 2, 1, 2}};
  return d;
}

// Theta with two legs whose cycles a, b wind eps_1 and eps_2 + 1 times.
//   a = e1 + e2 - e0 carries leg 1 (on edge 1)
//   b = e3 + e4 - e0 carries leg 2 (on edge 3) and base winding 1 (edge 4)
inline DecoratedDiagram two_leg_theta() {
  DecoratedDiagram d;
  d.label = "two-leg-theta";
  d.vertices = {0, 1, 2, 3};
  d.edges = {{0, 0, 1, 0}, {1, 0, 2, 0}, {2, 2, 1, 0}, {3, 0, 3, 0}, {4, 3, 1, 1}};
  d.legs = {{1, 2, 1, 1}, {2, 3, 1, 3}};
  return d;
}

// Complete graph K4 (vertices 0..3) with n legs along edge 0 -> 1. Leg i
// (1-based) sits at vertex 3 + i and wraps the segment entering it.
inline DecoratedDiagram kappa(int n) {
  DecoratedDiagram d;
  d.label = "kappa-" + std::to_string(n);
  d.vertices = {0, 1, 2, 3};
  d.edges = {{1, 0, 2, 0}, {2, 0, 3, 0}, {3, 1, 2, 0}, {4, 2, 3, 0}, {5, 3, 1, 0}};
  int previous = 0;
  int next_edge = 6;
  for (int i = 1; i <= n; ++i) {
    const int v = 3 + i;
    d.vertices.push_back(v);
    const int segment = (i == 1) ? 0 : next_edge++;
    d.edges.push_back({segment, previous, v, 0});
    d.legs.push_back({i, v, 1, segment});
    previous = v;
  }
  d.edges.push_back({n == 0 ? 0 : next_edge, previous, 1, 0});
  return d;
}

// Two legs joined by a single edge.
inline DecoratedDiagram chord() {
  DecoratedDiagram d;
  d.label = "chord";
  d.vertices = {0, 1};
  d.edges = {{0, 0, 1, 0}};
  d.legs = {{0, 0, 1, 0}, {1, 1, 1, 0}};
  return d;
}

// Vertex 0 carries two legs; vertex 1 closes up with a self-loop.
inline DecoratedDiagram fork() {
  DecoratedDiagram d;
  d.label = "fork";
  d.vertices = {0, 1};
  d.edges = {{0, 0, 1, 0}, {1, 1, 1, 0}};
  d.legs = {{0, 0, 1, 0}, {1, 0, -1, 0}};
  return d;
}

// Two vertices, each with a self-loop, joined by a bridge.
inline DecoratedDiagram handcuff() {
  DecoratedDiagram d;
  d.label = "handcuff";
  d.vertices = {0, 1};
  d.edges = {{0, 0, 0, 0}, {1, 0, 1, 0}, {2, 1, 1, 0}};
  return d;
}

}  // namespace cyclo::testing
