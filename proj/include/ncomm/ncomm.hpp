// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.
#pragma once

#include "ncomm/channel.hpp"
#include "ncomm/commutant.hpp"
#include "ncomm/io.hpp"
#include "ncomm/linalg.hpp"
#include "ncomm/noiseless.hpp"
#include "ncomm/operator_span.hpp"
#include "ncomm/structure.hpp"
#include "ncomm/types.hpp"
