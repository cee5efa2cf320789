#ifndef DETFSING_IDEALS_HPP
#define DETFSING_IDEALS_HPP

#include "detfsing/ideals/budget.hpp"
#include "detfsing/ideals/groebner.hpp"
#include "detfsing/ideals/ideal.hpp"
#include "detfsing/ideals/operations.hpp"

#endif  // DETFSING_IDEALS_HPP
