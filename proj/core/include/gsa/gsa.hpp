// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header for the gsa core library.
#pragma once

#include "gsa/csv.hpp"
#include "gsa/design.hpp"
#include "gsa/distributions.hpp"
#include "gsa/errors.hpp"
#include "gsa/matrix.hpp"
#include "gsa/meta.hpp"
#include "gsa/overlap.hpp"
#include "gsa/parallel.hpp"
#include "gsa/pawn.hpp"
#include "gsa/seeding.hpp"
#include "gsa/sobol_indices.hpp"
#include "gsa/sobol_sequence.hpp"
#include "gsa/stats.hpp"
#include "gsa/test_functions.hpp"
