#pragma once

// Umbrella header for the whole library.

#include "nilnull/error.hpp"
#include "nilnull/gauss_rational.hpp"
#include "nilnull/linear_combination.hpp"
#include "nilnull/multi_index.hpp"
#include "nilnull/matrix.hpp"
#include "nilnull/poly.hpp"
#include "nilnull/lie_algebra.hpp"
#include "nilnull/ustar.hpp"
#include "nilnull/weyl.hpp"
#include "nilnull/pfaffian.hpp"
#include "nilnull/invariant.hpp"
#include "nilnull/span.hpp"
#include "nilnull/morphism.hpp"
#include "nilnull/pipeline.hpp"
#include "nilnull/parse.hpp"
#include "nilnull/io.hpp"
#include "nilnull/random.hpp"
