#include "cyclo/covers.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <stdexcept>
#include <thread>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

bool palindromic(const LaurentPoly& a) {
  const std::int64_t lo = a.min_exponent(0);
  const std::int64_t hi = a.max_exponent(0);
  for (const auto& [e, c] : a.terms()) {
    if (a.coefficient({lo + hi - e[0]}) != c) return false;
  }
  return true;
}

}  // namespace

KnotDescriptor KnotDescriptor::make(std::string label, LaurentPoly alexander,
                                    SymmetryCheck symmetry) {
  if (!alexander.is_univariate()) {
    throw ValidationError("knot '" + label +
                          "': Alexander polynomial must be univariate");
  }
  if (alexander.is_zero()) {
    throw ValidationError("knot '" + label +
                          "': Alexander polynomial is zero");
  }
  const Integer at_one = alexander.sum_of_coefficients();
  if (abs(at_one) != 1) {
    throw ValidationError("knot '" + label + "': A(1) = " + at_one.get_str() +
                          ", expected +-1");
  }
  if (symmetry == SymmetryCheck::enforce && !palindromic(alexander)) {
    throw ValidationError("knot '" + label +
                          "': Alexander polynomial is not symmetric");
  }
  return KnotDescriptor(std::move(label), std::move(alexander));
}

Integer h1_order(const KnotDescriptor& knot, std::int64_t p) {
  if (p < 1) throw ValidationError("p must be >= 1");
  return abs(resultant_with_cyclotomic(knot.alexander(), p));
}

KnotDescriptor wheel_knot(int n) {
  if (n < 1) throw ValidationError("wheel knot needs n >= 1");
  const std::vector<std::string> ring{"t"};
  const LaurentPoly one = LaurentPoly::constant(ring, 1);
  const LaurentPoly t = LaurentPoly::variable(ring, "t");
  const LaurentPoly factor = one - pow(one - t, static_cast<unsigned>(n));
  return KnotDescriptor::make("wheel-" + std::to_string(n),
                              factor * substitute_inverse(factor, "t"));
}

std::vector<WheelRow> f_table(std::int64_t p, int n_max) {
  if (p < 1) throw ValidationError("p must be >= 1");
  if (n_max < 1) throw ValidationError("n_max must be >= 1");
  std::vector<WheelRow> table(static_cast<std::size_t>(n_max));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n_max; i = next++) {
      table[static_cast<std::size_t>(i)] = {i + 1, h1_order(wheel_knot(i + 1), p)};
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto count = std::min<unsigned>(hw, static_cast<unsigned>(n_max));
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < count; ++w) {
    workers.push_back(std::async(std::launch::async, worker));
  }
  for (auto& w : workers) w.get();
  return table;
}

namespace catalog {

KnotDescriptor unknot() {
  return KnotDescriptor::make("unknot", LaurentPoly::univariate("t", {{0, 1}}));
}

KnotDescriptor trefoil() {
  return KnotDescriptor::make(
      "trefoil", LaurentPoly::univariate("t", {{-1, 1}, {0, -1}, {1, 1}}));
}

KnotDescriptor figure_eight() {
  return KnotDescriptor::make(
      "figure-eight", LaurentPoly::univariate("t", {{-1, -1}, {0, 3}, {1, -1}}));
}

std::optional<KnotDescriptor> lookup(std::string_view name) {
  if (name == "unknot") return unknot();
  if (name == "trefoil") return trefoil();
  if (name == "figure-eight") return figure_eight();
  constexpr std::string_view prefix = "wheel-";
  if (name.starts_with(prefix)) {
    const std::string_view digits = name.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      return wheel_knot(n);
    }
  }
  return std::nullopt;
}

}  // namespace catalog

}  // namespace cyclo
