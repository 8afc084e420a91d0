// Copyright 2026 The DSHP Authors
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

#ifndef DSHP_DSHP_HPP_
#define DSHP_DSHP_HPP_

#include "dshp/approx.hpp"
#include "dshp/errors.hpp"
#include "dshp/exact.hpp"
#include "dshp/generators.hpp"
#include "dshp/graph.hpp"
#include "dshp/io.hpp"
#include "dshp/model.hpp"
#include "dshp/random.hpp"
#include "dshp/rational.hpp"
#include "dshp/reduction.hpp"
#include "dshp/two_value.hpp"

#endif  // DSHP_DSHP_HPP_
