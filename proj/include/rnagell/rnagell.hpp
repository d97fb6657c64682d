#pragma once

#include "rnagell/binomial_sums.hpp"
#include "rnagell/certificate.hpp"
#include "rnagell/integer.hpp"
#include "rnagell/padic.hpp"
#include "rnagell/proof_engine.hpp"
#include "rnagell/quadratic_ring.hpp"
#include "rnagell/ring_invariants.hpp"
