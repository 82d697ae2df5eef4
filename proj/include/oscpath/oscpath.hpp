#pragma once

// Umbrella header: exact enumeration of osculating lattice-path ensembles,
// graded by contact count.  Pulls in the constant-term engine, the
// difference-equation and brute-force oracles, the determinant slice, and
// the shared formatting / CLI plumbing.

#include "oscpath/bethe_checks.hpp"
#include "oscpath/brute_force.hpp"
#include "oscpath/chi_support.hpp"
#include "oscpath/cli.hpp"
#include "oscpath/ct_engine.hpp"
#include "oscpath/dp_solver.hpp"
#include "oscpath/errors.hpp"
#include "oscpath/format.hpp"
#include "oscpath/laurent.hpp"
#include "oscpath/lgv.hpp"
#include "oscpath/matchings.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/omega_poly.hpp"
#include "oscpath/permutations.hpp"
#include "oscpath/problem.hpp"
#include "oscpath/rational_eval.hpp"
