#ifndef MILO_MILO_HPP
#define MILO_MILO_HPP

// Umbrella header: monomial ideals, localization, irreducible
// decomposition, multigraded Betti numbers, and the exchange-property
// toolkit built on top of them.

#include "milo/betti.hpp"
#include "milo/decompose.hpp"
#include "milo/errors.hpp"
#include "milo/gf.hpp"
#include "milo/ideal.hpp"
#include "milo/monomial.hpp"
#include "milo/parallel.hpp"
#include "milo/parse.hpp"
#include "milo/polymatroid.hpp"
#include "milo/quotients.hpp"
#include "milo/random.hpp"
#include "milo/registry.hpp"
#include "milo/scan.hpp"
#include "milo/serialize.hpp"
#include "milo/taylor.hpp"

#endif
