#pragma once

#include "metric1/error.hpp"
#include "metric1/rational.hpp"
#include "metric1/ext_weight.hpp"
#include "metric1/report.hpp"
#include "metric1/fincat.hpp"
#include "metric1/metric_space.hpp"
#include "metric1/weights.hpp"
#include "metric1/coarse.hpp"
#include "metric1/limits.hpp"
#include "metric1/continuity.hpp"
#include "metric1/mapping.hpp"
#include "metric1/dagger.hpp"
#include "metric1/fixedpoint.hpp"
#include "metric1/geometry.hpp"
#include "metric1/json_io.hpp"
