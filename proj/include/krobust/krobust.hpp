#pragma once

#include "krobust/classes.hpp"
#include "krobust/construct.hpp"
#include "krobust/enumerate.hpp"
#include "krobust/graph.hpp"
#include "krobust/robustness.hpp"
#include "krobust/solution.hpp"
#include "krobust/sweeps.hpp"
