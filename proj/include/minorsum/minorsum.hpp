#pragma once

// Umbrella header: exact Pfaffians, minor summation, and the closed-form
// ordered-simplex integral of generalized Vandermonde determinants.

#include "minorsum/combinatorics.hpp"
#include "minorsum/determinant.hpp"
#include "minorsum/errors.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/minor_sum.hpp"
#include "minorsum/multipoly.hpp"
#include "minorsum/pfaffian.hpp"
#include "minorsum/rational.hpp"
#include "minorsum/rational_function.hpp"
#include "minorsum/rng.hpp"
#include "minorsum/simplex_integral.hpp"
#include "minorsum/symbolic.hpp"
