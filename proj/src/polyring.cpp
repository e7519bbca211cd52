#include "cyclo/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclo {

namespace {

void require_order(std::int64_t order) {
  if (order < 1) {
    throw std::invalid_argument("root-of-unity order must be >= 1, got " +
                                std::to_string(order));
  }
}

bool divisible(std::int64_t e, std::int64_t order) { return e % order == 0; }

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> variables)
    : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) {
        throw std::invalid_argument("duplicate variable name '" + vars_[i] +
                                    "'");
      }
    }
  }
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables,
                                  const Integer& c) {
  LaurentPoly p(std::move(variables));
  p.add_term(Exponents(p.num_variables(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables,
                                  Exponents exponents, const Integer& c) {
  LaurentPoly p(std::move(variables));
  if (exponents.size() != p.num_variables()) {
    throw std::invalid_argument("exponent vector length does not match ring");
  }
  p.add_term(exponents, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables,
                                  std::string_view name) {
  LaurentPoly p(std::move(variables));
  Exponents e(p.num_variables(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::univariate(
    std::string variable, const std::map<std::int64_t, Integer>& coeffs) {
  LaurentPoly p({std::move(variable)});
  for (const auto& [e, c] : coeffs) p.add_term({e}, c);
  return p;
}

std::size_t LaurentPoly::index_of(std::string_view variable) const {
  auto it = std::find(vars_.begin(), vars_.end(), variable);
  if (it == vars_.end()) {
    throw std::invalid_argument("unknown variable '" + std::string(variable) +
                                "'");
  }
  return static_cast<std::size_t>(it - vars_.begin());
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t LaurentPoly::min_exponent(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  std::int64_t m = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

std::int64_t LaurentPoly::max_exponent(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  std::int64_t m = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_.size()) {
    throw std::invalid_argument("exponent vector length does not match ring");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_same_ring(const LaurentPoly& other) const {
  if (vars_ != other.vars_) {
    throw std::invalid_argument("variable lists of operands differ");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  require_same_ring(other);
  LaurentPoly product(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != ib->first || c != ib->second) return false;
    ++ib;
  }
  return true;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  r += q;
  return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  r -= q;
  return r;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  r *= q;
  return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
  LaurentPoly result = LaurentPoly::constant(p.variables(), 1);
  LaurentPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly scale(const LaurentPoly& p, const Integer& c) {
  LaurentPoly r(p.variables());
  for (const auto& [e, coef] : p.terms()) r.add_term(e, coef * c);
  return r;
}

LaurentPoly substitute_inverse(const LaurentPoly& p,
                               std::string_view variable) {
  const std::size_t idx = p.index_of(variable);
  LaurentPoly r(p.variables());
  for (const auto& [key, c] : p.terms()) {
    Exponents e = key;
    e[idx] = -e[idx];
    r.add_term(e, c);
  }
  return r;
}

LaurentPoly shift_to_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents shift(p.num_variables());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = p.min_exponent(i);
  LaurentPoly r(p.variables());
  for (const auto& [key, c] : p.terms()) {
    Exponents e = key;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= shift[i];
    r.add_term(e, c);
  }
  return r;
}

Integer root_of_unity_sum(const LaurentPoly& p, std::int64_t order) {
  require_order(order);
  if (!p.is_univariate()) {
    throw std::invalid_argument("root_of_unity_sum needs a univariate polynomial");
  }
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) {
    if (divisible(e[0], order)) s += c;
  }
  return s * order;
}

Integer modp_indicator_sum(const LaurentPoly& p, std::int64_t order) {
  require_order(order);
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) {
    if (std::all_of(e.begin(), e.end(),
                    [order](std::int64_t x) { return divisible(x, order); })) {
      s += c;
    }
  }
  return s;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign > 0 ? det : Integer(-det);
}

Integer resultant_with_cyclotomic(const LaurentPoly& a, std::int64_t order) {
  require_order(order);
  if (!a.is_univariate()) {
    throw std::invalid_argument("resultant needs a univariate polynomial");
  }
  if (a.is_zero()) {
    throw std::invalid_argument("resultant of the zero polynomial");
  }
  // A(C) is circulant: entry (i, j) collects the coefficients whose
  // exponent is congruent to i - j mod order.
  const LaurentPoly shifted = shift_to_polynomial(a);
  std::vector<Integer> classes(static_cast<std::size_t>(order), 0);
  for (const auto& [e, c] : shifted.terms()) {
    classes[static_cast<std::size_t>(e[0] % order)] += c;
  }
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = classes[(i + n - j) % n];
  }
  return bareiss_determinant(std::move(m));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.variables()[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << magnitude.get_str() << '*' << mono;
    }
  }
  return out.str();
}

}  // namespace cyclo
