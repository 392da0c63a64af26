#pragma once

#include "lseries/arith.hpp"
#include "lseries/ball.hpp"
#include "lseries/characters.hpp"
#include "lseries/cyclotomic.hpp"
#include "lseries/evaluate.hpp"
#include "lseries/io.hpp"
#include "lseries/okada.hpp"
#include "lseries/periodic_function.hpp"
#include "lseries/product_criterion.hpp"
#include "lseries/rational.hpp"
#include "lseries/special.hpp"
