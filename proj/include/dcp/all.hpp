#pragma once

#include "dcp/bigint.hpp"
#include "dcp/canonical.hpp"
#include "dcp/caps.hpp"
#include "dcp/census.hpp"
#include "dcp/chromatic.hpp"
#include "dcp/comparators.hpp"
#include "dcp/dcp.hpp"
#include "dcp/errors.hpp"
#include "dcp/families.hpp"
#include "dcp/graph.hpp"
#include "dcp/io.hpp"
#include "dcp/mpoly.hpp"
#include "dcp/poly.hpp"
#include "dcp/tree_invariants.hpp"
#include "dcp/treegen.hpp"
