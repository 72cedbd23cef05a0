#pragma once

#include "hjq/accumulation.hpp"
#include "hjq/contraction.hpp"
#include "hjq/core.hpp"
#include "hjq/error.hpp"
#include "hjq/formation.hpp"
#include "hjq/geometry.hpp"
#include "hjq/numeric.hpp"
#include "hjq/tsing.hpp"
#include "hjq/tstep.hpp"
