// Copyright 2026 The qinv developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "qinv/classify.hpp"
#include "qinv/common.hpp"
#include "qinv/density.hpp"
#include "qinv/invariants.hpp"
#include "qinv/io.hpp"
#include "qinv/measure.hpp"
#include "qinv/named_states.hpp"
#include "qinv/random.hpp"
#include "qinv/report.hpp"
#include "qinv/roof.hpp"
#include "qinv/state.hpp"
