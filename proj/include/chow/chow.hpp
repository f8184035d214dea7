#pragma once

#include "chow/scalar.hpp"
#include "chow/mpoly.hpp"
#include "chow/binary_form.hpp"
#include "chow/resultant.hpp"
#include "chow/curve.hpp"
#include "chow/oracle.hpp"
#include "chow/cayley.hpp"
#include "chow/degeneration.hpp"
#include "chow/curve_file.hpp"
