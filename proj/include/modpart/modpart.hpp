#pragma once

#include "abelian.hpp"
#include "counting.hpp"
#include "discovery.hpp"
#include "divmatrix.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "numtheory.hpp"
#include "oeis.hpp"
#include "parallel.hpp"
#include "series.hpp"
#include "verify.hpp"
