#pragma once

#include "kchain/chain_graphs.hpp"
#include "kchain/closed_forms.hpp"
#include "kchain/errors.hpp"
#include "kchain/exact_linalg.hpp"
#include "kchain/invariant_oracles.hpp"
#include "kchain/matrix.hpp"
#include "kchain/rational.hpp"
#include "kchain/spectral.hpp"
