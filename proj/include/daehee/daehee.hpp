// Umbrella header for the whole library.
#pragma once

#include "errors.hpp"
#include "format.hpp"
#include "memo.hpp"
#include "poly.hpp"
#include "rat.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "stirling.hpp"
#include "verify/catalog.hpp"
#include "verify/oracles.hpp"
#include "verify/report.hpp"
#include "verify/runner.hpp"
