#ifndef QUADRIGEN_QUADRIGEN_HPP
#define QUADRIGEN_QUADRIGEN_HPP

#include "quadrigen/errors.hpp"
#include "quadrigen/families.hpp"
#include "quadrigen/geometry.hpp"
#include "quadrigen/json_io.hpp"
#include "quadrigen/polygon.hpp"
#include "quadrigen/polytope.hpp"
#include "quadrigen/report.hpp"
#include "quadrigen/toric_ideal.hpp"

#endif
