#pragma once

#include "asymk/arith.hpp"
#include "asymk/carries.hpp"
#include "asymk/concavity.hpp"
#include "asymk/counts.hpp"
#include "asymk/errors.hpp"
#include "asymk/hull.hpp"
#include "asymk/intlat.hpp"
#include "asymk/laurent.hpp"
#include "asymk/lp.hpp"
#include "asymk/polytope.hpp"
#include "asymk/veronese.hpp"
