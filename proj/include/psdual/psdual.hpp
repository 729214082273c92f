#pragma once

#include "psdual/radial_polynomial.hpp"
#include "psdual/electrostatics.hpp"
#include "psdual/erfc.hpp"
#include "psdual/quadrature.hpp"
#include "psdual/duality.hpp"
#include "psdual/oracle.hpp"
#include "psdual/density_parser.hpp"
#include "psdual/reports.hpp"
