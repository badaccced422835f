// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "peerrank/csv_io.hpp"
#include "peerrank/experiments.hpp"
#include "peerrank/grade_matrix.hpp"
#include "peerrank/metrics.hpp"
#include "peerrank/rng.hpp"
#include "peerrank/solver.hpp"
#include "peerrank/synth.hpp"
