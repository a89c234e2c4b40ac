#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmgf/fekete.hpp"
#include "cmgf/polynomial.hpp"
#include "cmgf/rational.hpp"
#include "cmgf/resultant.hpp"
#include "cmgf/sequences.hpp"

namespace cmgf {

/// Functional-equation data f(z^d) = A-side / B-side as polynomials in u over
/// Q[z], with an evaluation point alpha. Hypothesis checking only; the series
/// here all have radius of convergence 1.
struct MahlerInstance {
  PolyU A;
  PolyU B;
  std::uint32_t d = 2;
  BigRational alpha;

  std::uint32_t m() const {
    int dm = std::max(A.degree(), B.degree());
    return dm < 0 ? 0 : static_cast<std::uint32_t>(dm);
  }
};

/// G family: A(u) = (1+z^2) u - z, B(u) = 1+z^2, d = 2.
inline MahlerInstance mahler_gaussian_instance(BigRational alpha) {
  PolyQ one_plus_z2{BigRational(1), BigRational(0), BigRational(1)};
  PolyQ minus_z{BigRational(0), BigRational(-1)};
  MahlerInstance inst;
  inst.A = PolyU{minus_z, one_plus_z2};
  inst.B = PolyU{one_plus_z2};
  inst.d = 2;
  inst.alpha = std::move(alpha);
  return inst;
}

/// F family: A(u) = f_p (1 - z^p) u - f_p Phi(z), B(u) = 1 - z^p, d = p.
inline MahlerInstance mahler_character_instance(std::uint32_t p, Sign epsilon, ResidueRule rule,
                                                BigRational alpha) {
  std::vector<BigRational> cyc(p + 1);
  cyc[0] = BigRational(1);
  cyc[p] = BigRational(-1);
  PolyQ one_minus_zp(std::move(cyc));
  PolyQ phi = fekete(p, epsilon, rule);
  BigRational e(to_int(epsilon));
  MahlerInstance inst;
  inst.A = PolyU{(-phi).scaled(e), one_minus_zp.scaled(e)};
  inst.B = PolyU{one_minus_zp};
  inst.d = p;
  inst.alpha = std::move(alpha);
  return inst;
}

/// Outcome of checking the transcendence-theorem hypotheses with exact
/// arithmetic. A pass certifies: m < d, 0 < |alpha| < 1, and the resultant
/// Delta nonvanishing along alpha^(d^k) for every 0 <= k <= k_max.
struct MahlerReport {
  std::uint32_t d = 0;
  std::uint32_t m = 0;
  std::uint32_t k_max = 0;
  bool degree_ok = false;  // m < d
  bool alpha_ok = false;   // 0 < |alpha| < 1
  PolyQ delta;
  bool delta_nonvanishing = false;        // certified for all 0 <= k <= k_max
  bool delta_certified_all_k = false;     // sign argument covers every k >= 0
  std::optional<std::uint32_t> vanishing_k;
  std::vector<std::pair<std::uint32_t, BigRational>> delta_samples;  // small k, exact values

  bool pass() const { return degree_ok && alpha_ok && delta_nonvanishing; }
};

/// Exact-arithmetic certification of the hypotheses on one instance.
/// Failures are reported, not thrown.
inline MahlerReport check_mahler(const MahlerInstance& inst, std::uint32_t k_max) {
  MahlerReport rep;
  rep.d = inst.d;
  rep.m = inst.m();
  rep.k_max = k_max;
  rep.degree_ok = rep.m < inst.d;
  BigRational aa = inst.alpha.abs();
  rep.alpha_ok = aa.sign() > 0 && aa < BigRational(1);
  rep.delta = resultant_in_u(inst.A, inst.B);

  if (rep.delta.is_zero()) {
    rep.vanishing_k = 0;
    return rep;
  }

  // Two-term shape c0 + cj z^j with |cj| |alpha|^j < |c0| keeps Delta away
  // from zero at every point alpha^(d^k), since |alpha^(d^k)| <= |alpha|.
  if (rep.alpha_ok) {
    std::vector<std::pair<std::size_t, BigRational>> nonzero;
    for (std::size_t i = 0; i < rep.delta.coeffs().size(); ++i) {
      if (!rep.delta.coeffs()[i].is_zero()) nonzero.emplace_back(i, rep.delta.coeffs()[i]);
    }
    if (nonzero.size() == 1) {
      rep.delta_certified_all_k = true;
    } else if (nonzero.size() == 2 && nonzero[0].first == 0) {
      const BigRational& c0 = nonzero[0].second;
      const auto& [j, cj] = nonzero[1];
      if (cj.abs() * aa.pow(static_cast<long long>(j)) < c0.abs()) {
        rep.delta_certified_all_k = true;
      }
    }
  }

  // Exact numeric evaluation for small k; byte budget keeps alpha^(d^k)
  // representable. Records samples for k <= 8.
  const std::size_t bit_budget = std::size_t{1} << 26;
  const std::size_t alpha_bits = std::max<std::size_t>(
      1, std::max(inst.alpha.numerator_bits(), inst.alpha.denominator_bits()));
  std::uint64_t exponent = 1;
  bool numeric_all = true;
  std::uint32_t k = 0;
  for (; k <= k_max; ++k) {
    if (exponent * alpha_bits * static_cast<std::uint64_t>(std::max(rep.delta.degree(), 1)) >
        bit_budget) {
      numeric_all = false;
      break;
    }
    BigRational x = inst.alpha.pow(static_cast<long long>(exponent));
    BigRational val = rep.delta.evaluate(x);
    if (k <= 8) rep.delta_samples.emplace_back(k, val);
    if (val.is_zero()) {
      rep.vanishing_k = k;
      return rep;
    }
    if (k < k_max && exponent > (std::uint64_t{1} << 62) / inst.d) {
      numeric_all = false;
      ++k;
      break;
    }
    exponent *= inst.d;
  }
  rep.delta_nonvanishing = rep.delta_certified_all_k || numeric_all;
  return rep;
}

}  // namespace cmgf
