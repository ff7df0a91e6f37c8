#pragma once

// Umbrella header: the full claim-simulation toolkit.

#include "claimsim/chain_ladder.hpp"
#include "claimsim/config.hpp"
#include "claimsim/consolidate.hpp"
#include "claimsim/csv.hpp"
#include "claimsim/errors.hpp"
#include "claimsim/inflation.hpp"
#include "claimsim/manifest.hpp"
#include "claimsim/paid_loss.hpp"
#include "claimsim/revisions.hpp"
#include "claimsim/rng.hpp"
#include "claimsim/simulator.hpp"
#include "claimsim/transaction.hpp"
#include "claimsim/triangle.hpp"
#include "claimsim/version.hpp"
