#pragma once

// Umbrella header for the whole kit.

#include "lsakit/algebra.hpp"
#include "lsakit/bimodule.hpp"
#include "lsakit/complements.hpp"
#include "lsakit/datum.hpp"
#include "lsakit/fixtures.hpp"
#include "lsakit/flag.hpp"
#include "lsakit/json_io.hpp"
#include "lsakit/linalg.hpp"
#include "lsakit/morphism.hpp"
#include "lsakit/registry.hpp"
#include "lsakit/scalar.hpp"
