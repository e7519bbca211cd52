#pragma once

// First-homology orders of p-fold branched cyclic covers of knots,
// computed from the Alexander polynomial with Fox's formula
//
//   |H_1(Sigma^p(K))| = prod_{q=0}^{p-1} |A_K(w^q)|,
//
// where 0 stands for a cover with positive first Betti number.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/polyring.hpp"

namespace cyclo {

enum class SymmetryCheck { enforce, skip };

// A knot known only through its Alexander polynomial. The polynomial is
// accepted up to units +-t^k.
class KnotDescriptor {
 public:
  // Throws ValidationError unless `alexander` is univariate with
  // A(1) = +-1, and (with SymmetryCheck::enforce) has a palindromic
  // coefficient sequence.
  static KnotDescriptor make(std::string label, LaurentPoly alexander,
                             SymmetryCheck symmetry = SymmetryCheck::enforce);

  const std::string& label() const { return label_; }
  const LaurentPoly& alexander() const { return alexander_; }

 private:
  KnotDescriptor(std::string label, LaurentPoly alexander)
      : label_(std::move(label)), alexander_(std::move(alexander)) {}

  std::string label_;
  LaurentPoly alexander_;
};

// |H_1| of the p-fold branched cyclic cover; 0 when some p-th root of
// unity is a root of A_K. Requires p >= 1.
Integer h1_order(const KnotDescriptor& knot, std::int64_t p);

// Wheel knot Omega_n with A(t) = (1 - (1-t)^n)(1 - (1-t^{-1})^n).
KnotDescriptor wheel_knot(int n);

struct WheelRow {
  int n;
  Integer f;
};

// f(p, n) = h1_order(wheel_knot(n), p) for n = 1..n_max.
std::vector<WheelRow> f_table(std::int64_t p, int n_max);

namespace catalog {

KnotDescriptor unknot();
KnotDescriptor trefoil();
KnotDescriptor figure_eight();

// "unknot", "trefoil", "figure-eight", or "wheel-<n>".
std::optional<KnotDescriptor> lookup(std::string_view name);

}  // namespace catalog

}  // namespace cyclo
