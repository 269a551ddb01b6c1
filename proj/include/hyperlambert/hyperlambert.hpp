#pragma once

#include "errors.hpp"
#include "point.hpp"
#include "geodesic.hpp"
#include "metric.hpp"
#include "monotone.hpp"
#include "roots.hpp"
#include "random.hpp"
#include "lambert.hpp"
#include "holder.hpp"
#include "sampling.hpp"
#include "csv.hpp"
