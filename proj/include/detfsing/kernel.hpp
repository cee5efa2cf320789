#ifndef DETFSING_KERNEL_HPP
#define DETFSING_KERNEL_HPP

#include "detfsing/kernel/field.hpp"
#include "detfsing/kernel/matrix.hpp"
#include "detfsing/kernel/monomial.hpp"
#include "detfsing/kernel/polynomial.hpp"
#include "detfsing/kernel/ring.hpp"
#include "detfsing/kernel/text.hpp"
#include "detfsing/kernel/trace.hpp"

#endif  // DETFSING_KERNEL_HPP
