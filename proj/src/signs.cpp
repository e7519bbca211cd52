#include "cyclo/signs.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

#include "cyclo/errors.hpp"

namespace cyclo {

TwistChain::TwistChain(std::vector<Integer> linkings)
    : linkings_(std::move(linkings)) {
  if (linkings_.empty()) throw ValidationError("twist chain must be nonempty");
}

// The typeset product l_0 * prod_{i=0}^{mu} (-l_i) counts l_0 twice; with
// the direct-link case pinned to l_0 the consistent reading is
// (-1)^mu * prod_{i=0}^{mu} l_i.
Integer chain_twist(const TwistChain& chain) {
  Integer product = 1;
  for (const Integer& l : chain.linkings()) product *= l;
  const std::size_t mu = chain.linkings().size() - 1;
  return (mu % 2 == 0) ? product : Integer(-product);
}

EdgeIso identity_iso(const DecoratedDiagram& d) {
  EdgeIso iso;
  for (const Edge& e : d.edges) iso[e.id] = e.id;
  return iso;
}

EdgeIso inverse(const EdgeIso& iso) {
  EdgeIso inv;
  for (const auto& [a, b] : iso) {
    if (!inv.emplace(b, a).second) {
      throw ValidationError("edge map is not injective");
    }
  }
  return inv;
}

std::optional<std::map<int, int>> induced_vertex_map(const DecoratedDiagram& d1,
                                                     const DecoratedDiagram& d2,
                                                     const EdgeIso& iso) {
  if (d1.vertices.size() != d2.vertices.size() ||
      d1.edges.size() != d2.edges.size() || iso.size() != d1.edges.size()) {
    return std::nullopt;
  }
  std::set<int> images;
  for (const Edge& e : d1.edges) {
    auto it = iso.find(e.id);
    if (it == iso.end() || d2.find_edge(it->second) == nullptr) return std::nullopt;
    if (!images.insert(it->second).second) return std::nullopt;
  }

  // Candidate images of each vertex: common endpoints of the images of its
  // incident edges. Vertices without edges may go to any edgeless vertex.
  std::map<int, std::set<int>> candidates;
  std::set<int> edgeless2(d2.vertices.begin(), d2.vertices.end());
  for (const Edge& e : d2.edges) {
    edgeless2.erase(e.tail);
    edgeless2.erase(e.head);
  }
  for (int v : d1.vertices) candidates[v] = edgeless2;
  std::set<int> touched;
  for (const Edge& e : d1.edges) {
    const Edge* image = d2.find_edge(iso.at(e.id));
    const std::set<int> ends{image->tail, image->head};
    for (int v : {e.tail, e.head}) {
      if (touched.insert(v).second) {
        candidates[v] = ends;
      } else {
        std::set<int> kept;
        std::set_intersection(candidates[v].begin(), candidates[v].end(),
                              ends.begin(), ends.end(),
                              std::inserter(kept, kept.begin()));
        candidates[v] = std::move(kept);
      }
    }
  }

  auto consistent = [&](const std::map<int, int>& psi) {
    for (const Edge& e : d1.edges) {
      const Edge* image = d2.find_edge(iso.at(e.id));
      std::multiset<int> want{image->tail, image->head};
      std::multiset<int> got{psi.at(e.tail), psi.at(e.head)};
      if (want != got) return false;
    }
    return true;
  };

  std::vector<int> order(d1.vertices.begin(), d1.vertices.end());
  std::sort(order.begin(), order.end());
  std::map<int, int> psi;
  std::set<int> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == order.size()) return consistent(psi);
    for (int w : candidates[order[i]]) {
      if (used.contains(w)) continue;
      psi[order[i]] = w;
      used.insert(w);
      if (extend(i + 1)) return true;
      used.erase(w);
      psi.erase(order[i]);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return psi;
}

int comparison_sign(const DecoratedDiagram& d1, const DecoratedDiagram& d2,
                    const EdgeIso& iso) {
  for (const DecoratedDiagram* d : {&d1, &d2}) {
    for (const Edge& e : d->edges) {
      auto it = d->twists.find(e.id);
      if (it == d->twists.end()) {
        throw ValidationError("diagram '" + d->label +
                              "' has no twist for edge " + std::to_string(e.id));
      }
      if (it->second != 1 && it->second != -1) {
        throw ValidationError("diagram '" + d->label + "' has twist " +
                              std::to_string(it->second) + " on edge " +
                              std::to_string(e.id));
      }
    }
  }
  if (!induced_vertex_map(d1, d2, iso)) {
    throw ValidationError("edge map is not a graph isomorphism");
  }
  int sign = 1;
  for (const Edge& e : d1.edges) sign *= d1.twist(e.id) * d2.twist(iso.at(e.id));
  return sign;
}

}  // namespace cyclo
