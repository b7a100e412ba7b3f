// Copyright 2026 The WRE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header.

#include "wre/analytic.hpp"
#include "wre/config.hpp"
#include "wre/errors.hpp"
#include "wre/estimate.hpp"
#include "wre/husimi.hpp"
#include "wre/protocol.hpp"
#include "wre/purities.hpp"
#include "wre/qstate.hpp"
#include "wre/results_io.hpp"
#include "wre/sampling.hpp"
#include "wre/twirl.hpp"
