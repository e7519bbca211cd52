#include "cyclo/engine.hpp"

#include <algorithm>
#include <bit>
#include <future>

#include "cyclo/errors.hpp"
#include "cyclo/signs.hpp"

namespace cyclo {

namespace {

void require_modulus(std::int64_t p) {
  if (p < 1) throw ValidationError("p must be >= 1, got " + std::to_string(p));
}

void require_valid(const DecoratedDiagram& d, const MultiplierOptions& opts) {
  if (auto v = validate_complete(d)) throw ValidationError(format_violation(*v));
  if (static_cast<int>(d.legs.size()) > opts.leg_cap) {
    throw LegCapExceeded("diagram '" + d.label + "' has " +
                         std::to_string(d.legs.size()) +
                         " legs, above the cap of " +
                         std::to_string(opts.leg_cap));
  }
}

std::vector<Leg> legs_by_id(const DecoratedDiagram& d) {
  std::vector<Leg> legs = d.legs;
  std::sort(legs.begin(), legs.end(),
            [](const Leg& a, const Leg& b) { return a.id < b.id; });
  return legs;
}

std::vector<std::string> cycle_variables(std::size_t count) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < count; ++i) vars.push_back("t" + std::to_string(i));
  return vars;
}

}  // namespace

LaurentPoly leg_state_polynomial(const DecoratedDiagram& d,
                                 const CycleBasis& basis, LegSigns signs) {
  const std::vector<AffineWinding> forms = cycle_winding_affine(d, basis);
  const std::vector<std::string> vars = cycle_variables(forms.size());

  Exponents base(forms.size());
  for (std::size_t c = 0; c < forms.size(); ++c) base[c] = forms[c].constant;
  LaurentPoly result = LaurentPoly::monomial(vars, base);

  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  for (const Leg& leg : legs_by_id(d)) {
    Exponents wrap(forms.size(), 0);
    for (std::size_t c = 0; c < forms.size(); ++c) {
      auto it = forms[c].leg_coefficients.find(leg.id);
      if (it != forms[c].leg_coefficients.end()) wrap[c] = it->second;
    }
    const LaurentPoly state_one = LaurentPoly::monomial(vars, wrap);
    result *= (signs == LegSigns::alternating) ? one - state_one : one + state_one;
  }
  return result;
}

Integer multiplier_by_enumeration(const DecoratedDiagram& d, std::int64_t p,
                                  const MultiplierOptions& opts) {
  require_modulus(p);
  require_valid(d, opts);
  const std::vector<AffineWinding> forms = cycle_winding_affine(d, cycle_basis(d));
  const std::vector<Leg> legs = legs_by_id(d);
  if (legs.size() > 62) throw LegCapExceeded("leg-state enumeration is limited to 62 legs");
  const std::size_t cycles = forms.size();

  // step[l][c]: change of cycle c's winding when leg l switches on.
  std::vector<std::vector<std::int64_t>> step(legs.size(),
                                              std::vector<std::int64_t>(cycles, 0));
  std::vector<std::int64_t> winding(cycles);
  for (std::size_t c = 0; c < cycles; ++c) {
    winding[c] = reduce_mod(forms[c].constant, p);
    for (std::size_t l = 0; l < legs.size(); ++l) {
      auto it = forms[c].leg_coefficients.find(legs[l].id);
      if (it != forms[c].leg_coefficients.end()) step[l][c] = it->second;
    }
  }

  // Legs above `low` are fixed per chunk; each chunk walks the low legs in
  // Gray-code order so consecutive states differ in exactly one leg. Chunk
  // totals are summed in chunk order.
  const bool alternating = opts.signs == LegSigns::alternating;
  const std::size_t high = legs.size() > 16 ? std::min<std::size_t>(legs.size() - 16, 6) : 0;
  const std::size_t low = legs.size() - high;

  auto run_chunk = [&](std::uint64_t prefix) -> std::int64_t {
    std::vector<std::int64_t> w = winding;
    std::uint64_t state = prefix << low;
    for (std::size_t l = low; l < legs.size(); ++l) {
      if ((state >> l) & 1u) {
        for (std::size_t c = 0; c < cycles; ++c) w[c] = reduce_mod(w[c] + step[l][c], p);
      }
    }
    auto contribution = [&]() -> std::int64_t {
      for (std::int64_t x : w) {
        if (x != 0) return 0;
      }
      const bool odd = std::popcount(state) % 2 == 1;
      return (alternating && odd) ? -1 : 1;
    };
    std::int64_t total = contribution();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t g = 1; g < steps; ++g) {
      const auto leg = static_cast<std::size_t>(std::countr_zero(g));
      state ^= std::uint64_t{1} << leg;
      const bool on = (state >> leg) & 1u;
      for (std::size_t c = 0; c < cycles; ++c) {
        w[c] = reduce_mod(w[c] + (on ? step[leg][c] : -step[leg][c]), p);
      }
      total += contribution();
    }
    return total;
  };

  std::int64_t total = 0;
  if (high == 0) {
    total = run_chunk(0);
  } else {
    std::vector<std::future<std::int64_t>> chunks;
    for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << high); ++prefix) {
      chunks.push_back(std::async(std::launch::async, run_chunk, prefix));
    }
    for (auto& c : chunks) total += c.get();
  }
  return Integer(static_cast<long>(total)) * static_cast<long>(p);
}

Integer multiplier_by_indicator(const DecoratedDiagram& d, std::int64_t p,
                                const MultiplierOptions& opts) {
  require_modulus(p);
  require_valid(d, opts);
  const LaurentPoly f = leg_state_polynomial(d, cycle_basis(d), opts.signs);
  return modp_indicator_sum(f, p) * static_cast<long>(p);
}

Integer multiplier(const DecoratedDiagram& d, std::int64_t p,
                   const MultiplierOptions& opts) {
  const Integer direct = multiplier_by_enumeration(d, p, opts);
  const Integer indicator = multiplier_by_indicator(d, p, opts);
  if (direct != indicator) {
    throw std::logic_error("multiplier routes disagree on '" + d.label +
                           "': enumeration " + direct.get_str() +
                           ", indicator sum " + indicator.get_str());
  }
  return direct;
}

LiftSystem lift_system_for_state(const DecoratedDiagram& d, std::uint64_t state,
                                 std::int64_t p) {
  const std::vector<Leg> legs = legs_by_id(d);
  if (legs.size() > 64) throw LegCapExceeded("leg state needs more than 64 bits");
  LiftSystem sys;
  sys.vertices = d.vertices;
  sys.modulus = p;
  for (const Edge& e : d.edges) {
    std::int64_t offset = e.winding;
    for (std::size_t l = 0; l < legs.size(); ++l) {
      if (legs[l].edge == e.id && ((state >> l) & 1u)) offset += legs[l].sign;
    }
    sys.edges.push_back({e.id, e.tail, e.head, offset});
  }
  return sys;
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::plus: return "+1";
    case Sign::minus: return "-1";
    case Sign::unknown: return "unknown";
  }
  return "unknown";
}

LeadingTerm cwl_delta(const KnotDescriptor& knot, const DecoratedDiagram& d,
                      std::int64_t p, const MultiplierOptions& opts) {
  require_modulus(p);
  require_valid(d, opts);

  LeadingTerm term;
  term.grade = surplus(d);
  term.label = d.label;
  term.p = p;

  if (!is_theta(sawn_graph(d))) {
    term.magnitude = 0;
    term.note = "sawn graph is not a theta; the invariant vanishes on this grade";
    return term;
  }

  const Integer m = multiplier(d, p, opts);
  term.magnitude = 2 * h1_order(knot, p) * abs(m);

  if (d.has_full_twist_data()) {
    DecoratedDiagram reference = d;
    for (const Edge& e : reference.edges) reference.twists[e.id] = 1;
    int s = comparison_sign(d, reference, identity_iso(d));
    if (m < 0) s = -s;
    term.sign = s > 0 ? Sign::plus : Sign::minus;
  }
  return term;
}

Integer lmo_leading_multiplier(int l, std::int64_t p) {
  require_modulus(p);
  if (l < 0) throw ValidationError("leg count must be >= 0");
  // F(l, t) = sum over leg states of (-1)^{|eps|} t^{|eps|} = (1 - t)^l.
  std::map<std::int64_t, Integer> coeffs;
  Integer binom = 1;
  for (int j = 0; j <= l; ++j) {
    coeffs[j] = (j % 2 == 0) ? binom : Integer(-binom);
    binom = binom * (l - j) / (j + 1);
  }
  return root_of_unity_sum(LaurentPoly::univariate("t", coeffs), p);
}

WindowWitness window_nonzero(int l_start, std::int64_t p) {
  require_modulus(p);
  if (l_start < 1) throw ValidationError("window start must be >= 1");
  if (p == 1) return {true, l_start, Integer(0)};
  for (std::int64_t i = 0; i < p; ++i) {
    const int l = l_start + static_cast<int>(i);
    Integer value = lmo_leading_multiplier(l, p);
    if (value != 0) return {false, l, value};
  }
  throw std::logic_error("no nonzero multiplier in window [" +
                         std::to_string(l_start) + ", " +
                         std::to_string(l_start + p) + ") for p = " +
                         std::to_string(p));
}

}  // namespace cyclo
