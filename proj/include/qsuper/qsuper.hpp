#ifndef QSUPER_QSUPER_HPP
#define QSUPER_QSUPER_HPP

#include "brundan.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"
#include "permutation.hpp"
#include "weights.hpp"

#endif
