#pragma once

#include "ringlat/empirical.hpp"
#include "ringlat/ensemble.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/experiment.hpp"
#include "ringlat/latgeo.hpp"
#include "ringlat/limitlaw.hpp"
#include "ringlat/rings.hpp"
#include "ringlat/rng.hpp"
