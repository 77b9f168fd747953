#pragma once

#include "fdrate/constants.hpp"
#include "fdrate/dirac_algebra.hpp"
#include "fdrate/evolution.hpp"
#include "fdrate/kinematics.hpp"
#include "fdrate/precision.hpp"
#include "fdrate/quadrature.hpp"
#include "fdrate/rate.hpp"
