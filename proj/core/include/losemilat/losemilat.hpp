#pragma once

#include "losemilat/chain.hpp"
#include "losemilat/counting.hpp"
#include "losemilat/error.hpp"
#include "losemilat/parser.hpp"
#include "losemilat/point_set.hpp"
#include "losemilat/semilattice.hpp"
#include "losemilat/serialize.hpp"
#include "losemilat/solver.hpp"
