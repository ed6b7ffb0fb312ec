#ifndef LIECOH_LIECOH_HPP
#define LIECOH_LIECOH_HPP

#include "rational.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "lie_algebra.hpp"
#include "representation.hpp"
#include "ce_complex.hpp"
#include "pair_complex.hpp"
#include "deformation.hpp"
#include "catalog.hpp"
#include "io.hpp"
#include "report.hpp"

#endif
