#pragma once

#include "evenlat/error.hpp"
#include "evenlat/linalg.hpp"
#include "evenlat/lattice.hpp"
#include "evenlat/fqf.hpp"
#include "evenlat/symbol.hpp"
#include "evenlat/genus.hpp"
#include "evenlat/rootsys.hpp"
#include "evenlat/niemeier.hpp"
#include "evenlat/mathieu.hpp"
#include "evenlat/moduli.hpp"
#include "evenlat/io.hpp"
#include "evenlat/tables.hpp"
