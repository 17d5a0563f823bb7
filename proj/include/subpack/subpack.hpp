#pragma once

#include "subpack/canonical.hpp"
#include "subpack/classify.hpp"
#include "subpack/coloring.hpp"
#include "subpack/constructive.hpp"
#include "subpack/distance.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/error.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/graph.hpp"
#include "subpack/graph6.hpp"
#include "subpack/harness.hpp"
#include "subpack/ledger.hpp"
#include "subpack/paths.hpp"
#include "subpack/reduction.hpp"
#include "subpack/sequence.hpp"
#include "subpack/solver.hpp"
#include "subpack/weighted_is.hpp"
