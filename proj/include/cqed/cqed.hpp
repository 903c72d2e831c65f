#pragma once

// Convenience umbrella header.

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"
#include "cqed/version.hpp"

#include "cqed/materials.hpp"
#include "cqed/cavity.hpp"
#include "cqed/hybrid.hpp"

#include "cqed/linalg.hpp"
#include "cqed/util.hpp"

#include "cqed/spectra.hpp"
#include "cqed/units.hpp"
#include "cqed/config.hpp"
#include "cqed/sweeps.hpp"
#include "cqed/dynamics.hpp"

#include "cqed/io.hpp"
