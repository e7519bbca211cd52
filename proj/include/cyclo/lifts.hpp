#pragma once

// Lift equations over Z_p: one unknown a_v per vertex and, for every
// oriented edge e, the constraint
//
//   a_head(e) = a_tail(e) + offset(e)   (mod p).
//
// A connected system has either no solution or exactly p of them, one per
// value of the root unknown.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cyclo {

struct LiftEdge {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::int64_t offset = 0;  // signed intersection count, reduced mod p
};

struct LiftSystem {
  std::vector<int> vertices;
  std::vector<LiftEdge> edges;
  std::int64_t modulus = 1;
};

using LiftAssignment = std::map<int, std::int64_t>;  // vertex -> Z_p value

// Throws ValidationError when p < 1, the vertex set is empty or repeats an
// id, an edge names an unknown vertex, or the graph is disconnected.
void validate(const LiftSystem& sys);

// All p solutions ordered by the lowest-id vertex's value 0..p-1, or
// nullopt when some cycle's offset sum is nonzero mod p.
std::optional<std::vector<LiftAssignment>> solve(const LiftSystem& sys);

bool admissible(const LiftSystem& sys);

// Representative of x mod p in [0, p).
std::int64_t reduce_mod(std::int64_t x, std::int64_t p);

}  // namespace cyclo
