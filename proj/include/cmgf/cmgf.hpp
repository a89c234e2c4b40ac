#pragma once

// Umbrella header: exact +-1 multiplicative sequences, certified rational
// enclosures, lacunary generating-function evaluation, and the algebraic
// hypothesis checks built on top of them.

#include "cmgf/constants.hpp"
#include "cmgf/enclosure.hpp"
#include "cmgf/fekete.hpp"
#include "cmgf/gaussian_rational.hpp"
#include "cmgf/genfun.hpp"
#include "cmgf/mahler.hpp"
#include "cmgf/periodicity.hpp"
#include "cmgf/polynomial.hpp"
#include "cmgf/rational.hpp"
#include "cmgf/resultant.hpp"
#include "cmgf/sequences.hpp"
#include "cmgf/stats.hpp"
