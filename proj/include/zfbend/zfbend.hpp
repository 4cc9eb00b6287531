// SPDX-License-Identifier: Apache-2.0
//
// zfbend - sum-rate bend-point analysis for zero-forcing multiuser MIMO
// Copyright (C) 2026 The zfbend authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "channel.hpp"
#include "complex_mat.hpp"
#include "ergodic.hpp"
#include "exp_integral.hpp"
#include "figures.hpp"
#include "format.hpp"
#include "golden_section.hpp"
#include "matrix_io.hpp"
#include "montecarlo.hpp"
#include "rate.hpp"
#include "rng.hpp"
#include "series.hpp"
#include "types.hpp"
