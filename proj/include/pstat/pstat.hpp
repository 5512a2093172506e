#pragma once

// Umbrella header.

#include "canonical.hpp"
#include "determinant.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "points.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "schur.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "thermo.hpp"
