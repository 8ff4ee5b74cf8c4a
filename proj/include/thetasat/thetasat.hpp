#pragma once

#include "errors.hpp"
#include "figures.hpp"
#include "gauss_periodic.hpp"
#include "heat.hpp"
#include "saturation.hpp"
#include "theta.hpp"
#include "toeplitz.hpp"
