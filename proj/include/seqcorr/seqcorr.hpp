#pragma once

// Umbrella header: exact distributions of cyclic autocorrelation vectors of
// fixed-weight binary sequences, feasibility search for prescribed vectors,
// and Hadamard matrix assembly from circulant quadruples.

#include "autocorr.hpp"
#include "bigcount.hpp"
#include "bivariate.hpp"
#include "feasibility.hpp"
#include "hadamard.hpp"
#include "io.hpp"
#include "marginals.hpp"
#include "oracle.hpp"
#include "orbits.hpp"
#include "rng.hpp"
#include "sequence.hpp"
