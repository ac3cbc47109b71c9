#pragma once

#include "assoc/census.hpp"
#include "assoc/conflicts.hpp"
#include "assoc/constructions.hpp"
#include "assoc/core.hpp"
#include "assoc/error.hpp"
#include "assoc/flip_graph.hpp"
#include "assoc/render.hpp"
