#pragma once

#include "amlat/error.hpp"
#include "amlat/exact.hpp"
#include "amlat/numtheory.hpp"
#include "amlat/quaternion.hpp"
#include "amlat/lattice.hpp"
#include "amlat/order.hpp"
#include "amlat/ideal.hpp"
#include "amlat/enumerate.hpp"
#include "amlat/ideal_lattice.hpp"
#include "amlat/classification.hpp"
#include "amlat/io.hpp"
