#include "cyclo/lifts.hpp"

#include <algorithm>
#include <set>

#include "cyclo/errors.hpp"

namespace cyclo {

std::int64_t reduce_mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

void validate(const LiftSystem& sys) {
  if (sys.modulus < 1) {
    throw ValidationError("lift modulus must be >= 1, got " +
                          std::to_string(sys.modulus));
  }
  if (sys.vertices.empty()) throw ValidationError("lift system has no vertices");
  const std::set<int> ids(sys.vertices.begin(), sys.vertices.end());
  if (ids.size() != sys.vertices.size()) {
    throw ValidationError("lift system repeats a vertex id");
  }
  for (const LiftEdge& e : sys.edges) {
    if (!ids.contains(e.tail) || !ids.contains(e.head)) {
      throw ValidationError("lift edge " + std::to_string(e.id) +
                            " refers to an unknown vertex");
    }
  }
}

std::optional<std::vector<LiftAssignment>> solve(const LiftSystem& sys) {
  validate(sys);
  const std::int64_t p = sys.modulus;

  std::map<int, std::vector<const LiftEdge*>> adjacent;
  for (const LiftEdge& e : sys.edges) {
    adjacent[e.tail].push_back(&e);
    adjacent[e.head].push_back(&e);
  }

  // Potentials relative to the root, propagated breadth-first.
  const int root = *std::min_element(sys.vertices.begin(), sys.vertices.end());
  LiftAssignment potential{{root, 0}};
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for (const LiftEdge* e : adjacent[u]) {
      const bool forward = e->tail == u;
      const int v = forward ? e->head : e->tail;
      if (potential.contains(v)) continue;
      const std::int64_t step = reduce_mod(e->offset, p);
      potential[v] = reduce_mod(potential[u] + (forward ? step : p - step), p);
      queue.push_back(v);
    }
  }
  if (potential.size() != sys.vertices.size()) {
    throw ValidationError("lift system graph is disconnected");
  }

  for (const LiftEdge& e : sys.edges) {
    if (reduce_mod(potential[e.head] - potential[e.tail] - reduce_mod(e.offset, p), p) != 0) {
      return std::nullopt;
    }
  }

  std::vector<LiftAssignment> solutions;
  solutions.reserve(static_cast<std::size_t>(p));
  for (std::int64_t r = 0; r < p; ++r) {
    LiftAssignment a;
    for (const auto& [v, pot] : potential) a[v] = reduce_mod(pot + r, p);
    solutions.push_back(std::move(a));
  }
  return solutions;
}

bool admissible(const LiftSystem& sys) { return solve(sys).has_value(); }

}  // namespace cyclo
