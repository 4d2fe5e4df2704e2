#pragma once

// Umbrella header for the domination-criticality toolkit.

#include "domcrit/vertex_set.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/graph_io.hpp"
#include "domcrit/families.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/canonical.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/partition.hpp"
#include "domcrit/coalescence.hpp"
#include "domcrit/rng.hpp"
#include "domcrit/census.hpp"
#include "domcrit/sweeps.hpp"
#include "domcrit/json_out.hpp"
