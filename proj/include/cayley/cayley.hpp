#pragma once

#include "cayley/automorphism.hpp"
#include "cayley/census.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/holomorph.hpp"
#include "cayley/hypergraph.hpp"
#include "cayley/hyperset.hpp"
#include "cayley/io.hpp"
#include "cayley/permutation.hpp"
#include "cayley/regular.hpp"
#include "cayley/report.hpp"
#include "cayley/search.hpp"
#include "cayley/subset.hpp"
