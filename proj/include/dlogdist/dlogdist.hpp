#ifndef DLOGDIST_DLOGDIST_HPP
#define DLOGDIST_DLOGDIST_HPP

#include "field.hpp"
#include "poly.hpp"
#include "dlog.hpp"
#include "indep.hpp"
#include "charsum.hpp"
#include "counting.hpp"
#include "int_poly.hpp"
#include "applications.hpp"
#include "report.hpp"

#endif
