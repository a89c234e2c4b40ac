#pragma once

#include <cstdint>
#include <vector>

#include "cmgf/polynomial.hpp"
#include "cmgf/sequences.hpp"

namespace cmgf {

/// Kernel polynomial of a character-like function: sum of f_i z^i over
/// i = 1..p-1, degree p-1, constant term 0. With the Legendre rule this is
/// the Fekete polynomial of p.
inline PolyQ fekete(std::uint32_t p, Sign epsilon, ResidueRule rule) {
  SequenceSpec spec = character_like_spec(p, epsilon, rule);  // validates p
  std::vector<BigRational> c(p);
  for (std::uint32_t i = 1; i < p; ++i) {
    c[i] = BigRational(to_int(value_at(spec, i)));
  }
  return PolyQ(std::move(c));
}

}  // namespace cmgf
