#pragma once

/**
 * @file qsphere.hpp
 * @brief Everything: scalars, free algebra, rewriting, SU_q(2) basis,
 *        quotients, descent and JSON.
 */

#include "descent.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "ncpoly.hpp"
#include "parser.hpp"
#include "qmode.hpp"
#include "qpoly.hpp"
#include "qrat.hpp"
#include "quotients.hpp"
#include "rational.hpp"
#include "rewrite.hpp"
#include "suites.hpp"
#include "suq2.hpp"
#include "word.hpp"
