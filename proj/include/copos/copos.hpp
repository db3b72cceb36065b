#pragma once

#include "copos/copos2.hpp"
#include "copos/oracle.hpp"
#include "copos/polynomial.hpp"
#include "copos/quartic.hpp"
#include "copos/rational.hpp"
#include "copos/sign.hpp"
#include "copos/sturm.hpp"
#include "copos/sym_tensor.hpp"
#include "copos/vacuum.hpp"
