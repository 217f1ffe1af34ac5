#pragma once

// Lattice geometry: kernel lattices of circulant graphs, covolume-one
// rescalings, shortest-vector functionals, torus distance functionals, and
// exact 2-d covering radii.

#include "ringlat/coverage.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/polytope.hpp"
