#pragma once

#include "yardalloc/bench.hpp"
#include "yardalloc/constraints.hpp"
#include "yardalloc/core.hpp"
#include "yardalloc/fitness.hpp"
#include "yardalloc/ga.hpp"
#include "yardalloc/io.hpp"
#include "yardalloc/layout.hpp"
#include "yardalloc/lifo.hpp"
#include "yardalloc/rng.hpp"
