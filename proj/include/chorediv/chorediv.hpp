#pragma once

// Umbrella header for the chorediv library: solvers and checkers for fair
// division of indivisible chores under binary supermodular cost functions.

#include "chorediv/brute_force.hpp"
#include "chorediv/chore_set.hpp"
#include "chorediv/cost.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/fairness.hpp"
#include "chorediv/generate.hpp"
#include "chorediv/instance.hpp"
#include "chorediv/io.hpp"
#include "chorediv/matroid.hpp"
#include "chorediv/solvers.hpp"
