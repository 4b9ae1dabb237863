#pragma once

#include "birdtrack/rational.hpp"
#include "birdtrack/permutation.hpp"
#include "birdtrack/algebra.hpp"
#include "birdtrack/tableau.hpp"
#include "birdtrack/symbolic.hpp"
#include "birdtrack/projectors.hpp"
#include "birdtrack/verify.hpp"
#include "birdtrack/serialize.hpp"
