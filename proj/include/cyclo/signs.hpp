#pragma once

// Twist and comparison-sign calculus for graph Y-links whose underlying
// trivalent graphs are isomorphic.

#include <map>
#include <optional>
#include <vector>

#include "cyclo/diagrams.hpp"
#include "cyclo/polyring.hpp"

namespace cyclo {

// Linking numbers l_0, ..., l_mu of consecutive leaf pairs along a chain of
// claspers joining two Y-components.
class TwistChain {
 public:
  // Throws ValidationError on an empty chain.
  explicit TwistChain(std::vector<Integer> linkings);

  const std::vector<Integer>& linkings() const { return linkings_; }

 private:
  std::vector<Integer> linkings_;
};

// (-1)^mu * l_0 * l_1 * ... * l_mu. Each intermediate clasper flips the
// sign once; a direct link (mu = 0) returns l_0 itself.
Integer chain_twist(const TwistChain& chain);

// Edge bijection phi: edges of the first diagram -> edges of the second.
using EdgeIso = std::map<int, int>;

EdgeIso identity_iso(const DecoratedDiagram& d);
EdgeIso inverse(const EdgeIso& iso);

// A vertex bijection under which `iso` maps every edge to an edge with the
// corresponding endpoints, or nullopt when none exists.
std::optional<std::map<int, int>> induced_vertex_map(const DecoratedDiagram& d1,
                                                     const DecoratedDiagram& d2,
                                                     const EdgeIso& iso);

// prod_e T(e) * T'(phi(e)) over the edges of d1. Both diagrams need an
// explicit +-1 twist on every edge and `iso` must be a graph isomorphism;
// otherwise ValidationError.
int comparison_sign(const DecoratedDiagram& d1, const DecoratedDiagram& d2,
                    const EdgeIso& iso);

}  // namespace cyclo
