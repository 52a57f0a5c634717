#pragma once

#include "planwright/config.hpp"
#include "planwright/corridor.hpp"
#include "planwright/geometry.hpp"
#include "planwright/hierarchy.hpp"
#include "planwright/json_io.hpp"
#include "planwright/openings.hpp"
#include "planwright/pipeline.hpp"
#include "planwright/plan.hpp"
#include "planwright/random.hpp"
#include "planwright/rooms.hpp"
#include "planwright/sampling.hpp"
#include "planwright/svg.hpp"
#include "planwright/treemap.hpp"
#include "planwright/wall_graph.hpp"
