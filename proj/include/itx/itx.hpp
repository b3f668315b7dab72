#pragma once

// Umbrella header: trimmed sum-over-subsets transforms on the subset lattice,
// the intersection-indexed transform as an arithmetic circuit or a streaming
// computation, and weighted simple path / cycle counting built on top.

#include "itx/backend.hpp"
#include "itx/bigint.hpp"
#include "itx/circuit.hpp"
#include "itx/entropy.hpp"
#include "itx/graph.hpp"
#include "itx/itrans.hpp"
#include "itx/lattice.hpp"
#include "itx/oracle.hpp"
#include "itx/paths.hpp"
#include "itx/polynomial.hpp"
#include "itx/ring.hpp"
#include "itx/zeta.hpp"
