#pragma once

#include "radsolve/numerics.hpp"

namespace radsolve {

// First Cardano root of w^3 + C w + D = 0 with u*v = -C/3 enforced.
Complex cardano_first_root(Complex C, Complex D);

}  // namespace radsolve
