#ifndef RELSPIN_RELSPIN_HPP
#define RELSPIN_RELSPIN_HPP

#include "relspin/core.hpp"
#include "relspin/dispersion.hpp"
#include "relspin/reflection.hpp"
#include "relspin/soc.hpp"
#include "relspin/verify.hpp"
#include "relspin/well.hpp"

#endif
