#pragma once

// Everything at once. Each header also stands on its own.

#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"
#include "crosskit/plane_map.hpp"
#include "crosskit/geometry.hpp"
#include "crosskit/generators.hpp"
#include "crosskit/map_builder.hpp"
#include "crosskit/bounds.hpp"
#include "crosskit/lemma_engine.hpp"
#include "crosskit/oracle.hpp"
