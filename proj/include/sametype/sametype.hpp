#pragma once

// Umbrella header.

#include "distribution.hpp"
#include "moments.hpp"
#include "number.hpp"
#include "pgf.hpp"
#include "polynomial.hpp"
#include "type_check.hpp"
