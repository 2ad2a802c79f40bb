// Copyright 2026 The cdc5 Authors.
//
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

#ifndef CDC5_CDC5_HPP
#define CDC5_CDC5_HPP

#include "cdc5/cdc.hpp"
#include "cdc5/certificate.hpp"
#include "cdc5/conjecture.hpp"
#include "cdc5/cycle_space.hpp"
#include "cdc5/edge_set.hpp"
#include "cdc5/error.hpp"
#include "cdc5/flow.hpp"
#include "cdc5/graph.hpp"
#include "cdc5/graph6.hpp"
#include "cdc5/named_graphs.hpp"
#include "cdc5/parallel.hpp"
#include "cdc5/search.hpp"

#endif  // CDC5_CDC5_HPP
