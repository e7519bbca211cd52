#include "cyclo/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

using VertexIndex = std::unordered_map<int, std::size_t>;

VertexIndex index_vertices(const DecoratedDiagram& d) {
  VertexIndex idx;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) idx[d.vertices[i]] = i;
  return idx;
}

std::size_t vertex_at(const VertexIndex& idx, int v) {
  auto it = idx.find(v);
  if (it == idx.end()) {
    throw ValidationError("edge endpoint refers to unknown vertex " +
                          std::to_string(v));
  }
  return it->second;
}

bool edges_connected(const DecoratedDiagram& d, const VertexIndex& idx) {
  if (d.vertices.empty()) return false;
  UnionFind uf(d.vertices.size());
  std::size_t components = d.vertices.size();
  for (const Edge& e : d.edges) {
    if (uf.unite(vertex_at(idx, e.tail), vertex_at(idx, e.head))) --components;
  }
  return components == 1;
}

template <typename T, typename Id>
std::optional<int> first_duplicate(const std::vector<T>& items, Id id_of) {
  std::set<int> seen;
  for (const T& item : items) {
    if (!seen.insert(id_of(item)).second) return id_of(item);
  }
  return std::nullopt;
}

Violation make(ViolationKind kind, ElementKind element, int id,
               std::string message) {
  return Violation{kind, element, id, std::move(message)};
}

}  // namespace

const Edge* DecoratedDiagram::find_edge(int id) const {
  auto it = std::find_if(edges.begin(), edges.end(),
                         [id](const Edge& e) { return e.id == id; });
  return it == edges.end() ? nullptr : &*it;
}

int DecoratedDiagram::twist(int edge_id) const {
  auto it = twists.find(edge_id);
  return it == twists.end() ? 1 : it->second;
}

bool DecoratedDiagram::has_full_twist_data() const {
  return std::all_of(edges.begin(), edges.end(),
                     [this](const Edge& e) { return twists.contains(e.id); });
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_id: return "duplicate_id";
    case ViolationKind::unknown_vertex: return "unknown_vertex";
    case ViolationKind::unknown_edge: return "unknown_edge";
    case ViolationKind::bad_leg_sign: return "bad_leg_sign";
    case ViolationKind::bad_twist: return "bad_twist";
    case ViolationKind::leg_target_not_incident: return "leg_target_not_incident";
    case ViolationKind::fork: return "fork";
    case ViolationKind::chord: return "chord";
    case ViolationKind::not_trivalent: return "not_trivalent";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::surplus_too_small: return "surplus_too_small";
  }
  return "unknown";
}

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::diagram: return "diagram";
    case ElementKind::vertex: return "vertex";
    case ElementKind::edge: return "edge";
    case ElementKind::leg: return "leg";
  }
  return "unknown";
}

std::string format_violation(const Violation& v) {
  std::string out = "violation ";
  out += to_string(v.kind);
  out += " at ";
  out += to_string(v.element);
  if (v.element != ElementKind::diagram) out += " " + std::to_string(v.element_id);
  out += ": " + v.message;
  return out;
}

std::optional<Violation> validate_complete(const DecoratedDiagram& d) {
  using VK = ViolationKind;
  using EK = ElementKind;

  if (auto dup = first_duplicate(d.vertices, [](int v) { return v; })) {
    return make(VK::duplicate_id, EK::vertex, *dup, "vertex id repeated");
  }
  if (auto dup = first_duplicate(d.edges, [](const Edge& e) { return e.id; })) {
    return make(VK::duplicate_id, EK::edge, *dup, "edge id repeated");
  }
  if (auto dup = first_duplicate(d.legs, [](const Leg& l) { return l.id; })) {
    return make(VK::duplicate_id, EK::leg, *dup, "leg id repeated");
  }

  const std::set<int> vertex_set(d.vertices.begin(), d.vertices.end());
  for (const Edge& e : d.edges) {
    for (int end : {e.tail, e.head}) {
      if (!vertex_set.contains(end)) {
        return make(VK::unknown_vertex, EK::edge, e.id,
                    "endpoint " + std::to_string(end) + " is not a vertex");
      }
    }
  }
  for (const Leg& l : d.legs) {
    if (!vertex_set.contains(l.vertex)) {
      return make(VK::unknown_vertex, EK::leg, l.id,
                  "attached vertex " + std::to_string(l.vertex) +
                      " is not a vertex");
    }
    if (l.sign != 1 && l.sign != -1) {
      return make(VK::bad_leg_sign, EK::leg, l.id,
                  "wrap sign must be +1 or -1, got " + std::to_string(l.sign));
    }
    const Edge* target = d.find_edge(l.edge);
    if (target == nullptr) {
      return make(VK::unknown_edge, EK::leg, l.id,
                  "target edge " + std::to_string(l.edge) + " does not exist");
    }
    if (target->tail != l.vertex && target->head != l.vertex) {
      return make(VK::leg_target_not_incident, EK::leg, l.id,
                  "target edge " + std::to_string(l.edge) +
                      " is not incident to vertex " + std::to_string(l.vertex));
    }
  }
  for (const auto& [edge_id, value] : d.twists) {
    if (d.find_edge(edge_id) == nullptr) {
      return make(VK::unknown_edge, EK::edge, edge_id,
                  "twist given for a missing edge");
    }
    if (value != 1 && value != -1) {
      return make(VK::bad_twist, EK::edge, edge_id,
                  "twist must be +1 or -1, got " + std::to_string(value));
    }
  }

  std::map<int, int> legs_at;
  std::map<int, int> edge_ends_at;
  for (int v : vertex_set) {
    legs_at[v] = 0;
    edge_ends_at[v] = 0;
  }
  for (const Leg& l : d.legs) ++legs_at[l.vertex];
  for (const Edge& e : d.edges) {
    ++edge_ends_at[e.tail];
    ++edge_ends_at[e.head];
  }

  for (int v : vertex_set) {
    if (legs_at[v] > 1) {
      return make(VK::fork, EK::vertex, v,
                  "vertex carries " + std::to_string(legs_at[v]) + " legs");
    }
  }

  std::vector<Edge> sorted_edges = d.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  auto bare_leg_end = [&](int v) {
    return legs_at[v] == 1 && edge_ends_at[v] == 1;
  };
  for (const Edge& e : sorted_edges) {
    if (e.tail != e.head && bare_leg_end(e.tail) && bare_leg_end(e.head)) {
      return make(VK::chord, EK::edge, e.id,
                  "edge joins two legs with no trivalent vertex between them");
    }
  }

  for (int v : vertex_set) {
    const int incidence = legs_at[v] + edge_ends_at[v];
    if (incidence != 3) {
      return make(VK::not_trivalent, EK::vertex, v,
                  "incidence " + std::to_string(incidence) + ", expected 3");
    }
  }

  if (!edges_connected(d, index_vertices(d))) {
    return make(VK::disconnected, EK::diagram, 0,
                "edge graph of '" + d.label + "' is not connected");
  }

  const int s = surplus(d);
  if (s < 2) {
    return make(VK::surplus_too_small, EK::diagram, 0,
                "surplus " + std::to_string(s) + " < 2");
  }
  return std::nullopt;
}

int surplus(const DecoratedDiagram& d) {
  return static_cast<int>(d.vertices.size()) - static_cast<int>(d.legs.size());
}

mpq_class degree(const DecoratedDiagram& d) {
  mpq_class deg(static_cast<long>(d.vertices.size() + d.legs.size()), 2);
  deg.canonicalize();
  return deg;
}

CycleBasis cycle_basis(const DecoratedDiagram& d) {
  std::vector<int> order;
  order.reserve(d.edges.size());
  for (const Edge& e : d.edges) order.push_back(e.id);
  std::sort(order.begin(), order.end());
  return cycle_basis(d, order);
}

CycleBasis cycle_basis(const DecoratedDiagram& d,
                       std::span<const int> edge_priority) {
  const VertexIndex idx = index_vertices(d);
  if (!edges_connected(d, idx)) {
    throw ValidationError("cycle basis needs a connected edge graph");
  }
  std::vector<int> sorted_priority(edge_priority.begin(), edge_priority.end());
  std::sort(sorted_priority.begin(), sorted_priority.end());
  std::vector<int> all_ids;
  for (const Edge& e : d.edges) all_ids.push_back(e.id);
  std::sort(all_ids.begin(), all_ids.end());
  if (sorted_priority != all_ids) {
    throw std::invalid_argument("edge priority must list every edge once");
  }

  const std::size_t n = d.vertices.size();
  UnionFind uf(n);
  std::vector<const Edge*> tree_edges;
  std::vector<const Edge*> closing_edges;
  for (int id : edge_priority) {
    const Edge* e = d.find_edge(id);
    const std::size_t a = vertex_at(idx, e->tail);
    const std::size_t b = vertex_at(idx, e->head);
    if (a != b && uf.unite(a, b)) {
      tree_edges.push_back(e);
    } else {
      closing_edges.push_back(e);
    }
  }

  // Root the tree at the lowest vertex id and record parent edges.
  std::vector<std::vector<const Edge*>> adjacent(n);
  for (const Edge* e : tree_edges) {
    adjacent[vertex_at(idx, e->tail)].push_back(e);
    adjacent[vertex_at(idx, e->head)].push_back(e);
  }
  const int root_id = *std::min_element(d.vertices.begin(), d.vertices.end());
  const std::size_t root = idx.at(root_id);
  std::vector<const Edge*> parent_edge(n, nullptr);
  std::vector<std::size_t> parent(n, n);
  std::vector<int> depth(n, 0);
  std::vector<std::size_t> queue{root};
  parent[root] = root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (const Edge* e : adjacent[u]) {
      const std::size_t t = idx.at(e->tail);
      const std::size_t v = (t == u) ? idx.at(e->head) : t;
      if (parent[v] != n) continue;
      parent[v] = u;
      parent_edge[v] = e;
      depth[v] = depth[u] + 1;
      queue.push_back(v);
    }
  }

  // Sign of walking tree edge parent_edge[child] from child to its parent.
  auto upward_sign = [&](std::size_t child) {
    return idx.at(parent_edge[child]->tail) == child ? 1 : -1;
  };

  CycleBasis basis;
  for (const Edge* closing : closing_edges) {
    Cycle c;
    c.id = static_cast<int>(basis.cycles.size());
    c.incidence[closing->id] += 1;
    // Close the loop by walking head -> tail through the tree.
    std::size_t up = idx.at(closing->head);
    std::size_t down = idx.at(closing->tail);
    while (up != down) {
      if (depth[up] >= depth[down]) {
        c.incidence[parent_edge[up]->id] += upward_sign(up);
        up = parent[up];
      } else {
        c.incidence[parent_edge[down]->id] -= upward_sign(down);
        down = parent[down];
      }
    }
    std::erase_if(c.incidence, [](const auto& kv) { return kv.second == 0; });
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

std::vector<AffineWinding> cycle_winding_affine(const DecoratedDiagram& d,
                                                const CycleBasis& basis) {
  std::vector<AffineWinding> forms;
  forms.reserve(basis.cycles.size());
  for (const Cycle& c : basis.cycles) {
    AffineWinding form;
    form.cycle_id = c.id;
    for (const auto& [edge_id, sign] : c.incidence) {
      const Edge* e = d.find_edge(edge_id);
      if (e == nullptr) {
        throw ValidationError("cycle refers to unknown edge " +
                              std::to_string(edge_id));
      }
      form.constant += sign * e->winding;
    }
    for (const Leg& l : d.legs) {
      auto it = c.incidence.find(l.edge);
      if (it == c.incidence.end()) continue;
      const int coef = it->second * l.sign;
      if (coef != 0) form.leg_coefficients[l.id] += coef;
    }
    std::erase_if(form.leg_coefficients,
                  [](const auto& kv) { return kv.second == 0; });
    forms.push_back(std::move(form));
  }
  return forms;
}

SawnGraph sawn_graph(const DecoratedDiagram& d) {
  std::set<int> leg_vertices;
  for (const Leg& l : d.legs) leg_vertices.insert(l.vertex);

  // Half-edge (edge index, side) lists per vertex; side 0 is the tail.
  std::map<int, std::vector<std::pair<std::size_t, int>>> ends;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    ends[d.edges[i].tail].push_back({i, 0});
    ends[d.edges[i].head].push_back({i, 1});
  }
  for (int v : leg_vertices) {
    if (ends[v].size() != 2) {
      throw ValidationError("leg vertex " + std::to_string(v) +
                            " must have exactly two edge ends");
    }
  }

  auto endpoint = [&](std::size_t edge, int side) {
    return side == 0 ? d.edges[edge].tail : d.edges[edge].head;
  };

  SawnGraph g;
  std::vector<bool> used(d.edges.size(), false);
  for (int v : d.vertices) {
    if (!leg_vertices.contains(v)) g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end());

  for (int start : g.vertices) {
    for (auto [edge, side] : ends[start]) {
      if (used[edge]) continue;
      used[edge] = true;
      int far_side = 1 - side;
      int at = endpoint(edge, far_side);
      while (leg_vertices.contains(at)) {
        const auto& pair = ends[at];
        const auto next = (pair[0] == std::pair{edge, far_side}) ? pair[1] : pair[0];
        edge = next.first;
        used[edge] = true;
        far_side = 1 - next.second;
        at = endpoint(edge, far_side);
      }
      g.edges.push_back({start, at});
    }
  }

  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (used[i]) continue;
    ++g.closed_chains;
    std::size_t edge = i;
    int far_side = 1;
    while (!used[edge]) {
      used[edge] = true;
      const int at = endpoint(edge, far_side);
      const auto& pair = ends[at];
      const auto next = (pair[0] == std::pair{edge, far_side}) ? pair[1] : pair[0];
      edge = next.first;
      far_side = 1 - next.second;
    }
  }
  return g;
}

bool is_theta(const SawnGraph& g) {
  if (g.closed_chains != 0 || g.vertices.size() != 2 || g.edges.size() != 3) {
    return false;
  }
  return std::none_of(g.edges.begin(), g.edges.end(),
                      [](const auto& e) { return e.first == e.second; });
}

}  // namespace cyclo
