#pragma once

#include "hypell/catalog.hpp"
#include "hypell/error.hpp"
#include "hypell/lattice.hpp"
#include "hypell/number.hpp"
#include "hypell/oracle.hpp"
#include "hypell/positivity.hpp"
#include "hypell/serialize.hpp"
#include "hypell/seshadri.hpp"
