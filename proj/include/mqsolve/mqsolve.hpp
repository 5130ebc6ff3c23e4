#pragma once

// Solver for systems of quadratic boolean polynomials: hybrid exhaustive
// search with Macaulay-matrix consistency filtering, sparse Las Vegas linear
// algebra, and the matching cost and parameter estimators.

#include "mqsolve/anf_io.hpp"
#include "mqsolve/asymptotic.hpp"
#include "mqsolve/berlekamp_massey.hpp"
#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/bitvec.hpp"
#include "mqsolve/cost.hpp"
#include "mqsolve/experiments.hpp"
#include "mqsolve/gf2_64.hpp"
#include "mqsolve/macaulay.hpp"
#include "mqsolve/monomials.hpp"
#include "mqsolve/probability.hpp"
#include "mqsolve/quadratic.hpp"
#include "mqsolve/rng.hpp"
#include "mqsolve/series.hpp"
#include "mqsolve/solver.hpp"
#include "mqsolve/sparse_matrix.hpp"
#include "mqsolve/wiedemann.hpp"
