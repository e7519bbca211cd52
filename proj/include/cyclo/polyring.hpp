#pragma once

/**
 * @file polyring.hpp
 * @brief Multivariate Laurent polynomials over the integers.
 *
 * Coefficients are GMP integers and exponents are signed 64-bit values.
 * Terms are kept in a sorted map keyed by exponent vector, so iteration
 * order (and therefore every printed or serialized form) is deterministic.
 * No stored coefficient is ever zero.
 *
 * Sums over p-th roots of unity are computed by sorting exponents into
 * residue classes mod p:
 *
 *   sum_{q=0}^{p-1} (w^q)^e = p  if p | e,  0 otherwise,
 *
 * so nothing here touches floating point.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

using Integer = mpz_class;
using Exponents = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);

  static LaurentPoly constant(std::vector<std::string> variables,
                              const Integer& c);
  static LaurentPoly monomial(std::vector<std::string> variables,
                              Exponents exponents, const Integer& c = 1);
  // The polynomial `name` in a ring whose variables are `variables`.
  static LaurentPoly variable(std::vector<std::string> variables,
                              std::string_view name);
  // Univariate polynomial from an exponent -> coefficient map.
  static LaurentPoly univariate(std::string variable,
                                const std::map<std::int64_t, Integer>& coeffs);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_variables() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_univariate() const { return vars_.size() == 1; }

  // Throws std::invalid_argument for an unknown variable.
  std::size_t index_of(std::string_view variable) const;

  Integer coefficient(const Exponents& e) const;
  // Value at t_i = 1 for every variable.
  Integer sum_of_coefficients() const;

  std::int64_t min_exponent(std::size_t var) const;
  std::int64_t max_exponent(std::size_t var) const;

  // Adds c * monomial(e) in place; zero results are erased.
  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void require_same_ring(const LaurentPoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly pow(const LaurentPoly& p, unsigned exponent);
LaurentPoly scale(const LaurentPoly& p, const Integer& c);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, q);
}
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return sub(p, q);
}
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return mul(p, q);
}

// Negates the exponent of `variable` in every term, i.e. t -> t^{-1}.
LaurentPoly substitute_inverse(const LaurentPoly& p, std::string_view variable);

// Multiplies by a monomial so that every variable's minimum exponent is 0.
LaurentPoly shift_to_polynomial(const LaurentPoly& p);

// sum_{q=0}^{order-1} p(w^q) for w a primitive order-th root of unity.
// Requires a univariate polynomial and order >= 1.
Integer root_of_unity_sum(const LaurentPoly& p, std::int64_t order);

// Sum of coefficients over terms whose exponents are all divisible by
// `order`. Equals (1/order^b) * sum over all b-tuples of order-th roots of
// unity of p, for b = number of variables. Requires order >= 1.
Integer modp_indicator_sum(const LaurentPoly& p, std::int64_t order);

// prod_{q=0}^{order-1} A(w^q) up to sign, computed as det A(C) for the
// order x order cyclic shift matrix C after shifting A to an ordinary
// polynomial with nonzero constant term. Only the absolute value is
// meaningful. Throws on the zero polynomial or order < 1.
Integer resultant_with_cyclotomic(const LaurentPoly& a, std::int64_t order);

// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

// Human-readable form, e.g. "-t^-1 + 3 - t".
std::string to_string(const LaurentPoly& p);

}  // namespace cyclo
