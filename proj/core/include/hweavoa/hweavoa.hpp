#pragma once

#include "hweavoa/benchmarks.hpp"
#include "hweavoa/engine.hpp"
#include "hweavoa/harness.hpp"
#include "hweavoa/kernel.hpp"
#include "hweavoa/random.hpp"
#include "hweavoa/stats.hpp"
#include "hweavoa/strategies.hpp"
#include "hweavoa/types.hpp"
