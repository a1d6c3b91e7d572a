#pragma once

#include "tfractal/errors.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/algorithms.hpp"
#include "tfractal/fractal.hpp"
#include "tfractal/instance.hpp"
#include "tfractal/solvers.hpp"
#include "tfractal/composer.hpp"
#include "tfractal/reducer.hpp"
#include "tfractal/io.hpp"
#include "tfractal/generators.hpp"
#include "tfractal/verify.hpp"
