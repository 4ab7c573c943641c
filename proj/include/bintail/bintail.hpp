#pragma once

#include "bintail/rational.hpp"
#include "bintail/types.hpp"
#include "bintail/numeric.hpp"
#include "bintail/core_tail.hpp"
#include "bintail/stirling_psi.hpp"
#include "bintail/bound_result.hpp"
#include "bintail/closed_bounds.hpp"
#include "bintail/normal.hpp"
#include "bintail/quadrature.hpp"
#include "bintail/normal_bounds.hpp"
#include "bintail/classical_bounds.hpp"
#include "bintail/bound_table.hpp"
#include "bintail/verify.hpp"
