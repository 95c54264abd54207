#pragma once

#include "types.hpp"
#include "qcore.hpp"
#include "hyperseries.hpp"
#include "qoperator.hpp"
#include "qpolynomials.hpp"
#include "qintegrate.hpp"
