// Copyright 2026 The grouppb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file grouppb.hpp
/// @brief Everything in one include.

#ifndef GROUPPB_GROUPPB_HPP
#define GROUPPB_GROUPPB_HPP

#include "grouppb/approx.hpp"
#include "grouppb/core.hpp"
#include "grouppb/deletion.hpp"
#include "grouppb/dimdp.hpp"
#include "grouppb/generate.hpp"
#include "grouppb/hier.hpp"
#include "grouppb/io.hpp"
#include "grouppb/layers.hpp"
#include "grouppb/lp.hpp"
#include "grouppb/milp.hpp"
#include "grouppb/oracle.hpp"
#include "grouppb/outcome.hpp"
#include "grouppb/rational.hpp"
#include "grouppb/solve.hpp"
#include "grouppb/types.hpp"

#endif  // GROUPPB_GROUPPB_HPP
