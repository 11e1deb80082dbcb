#pragma once

#include "tspread/betti.hpp"
#include "tspread/borel.hpp"
#include "tspread/count.hpp"
#include "tspread/enumeration.hpp"
#include "tspread/error.hpp"
#include "tspread/io.hpp"
#include "tspread/monomial.hpp"
#include "tspread/solver.hpp"
