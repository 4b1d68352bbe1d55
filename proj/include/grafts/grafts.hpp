// Copyright 2026 The Grafts Authors.
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

// Convenience header pulling in the whole library.

#ifndef GRAFTS_GRAFTS_HPP_
#define GRAFTS_GRAFTS_HPP_

#include "grafts/cathedral.hpp"
#include "grafts/comb.hpp"
#include "grafts/decomposition.hpp"
#include "grafts/generate.hpp"
#include "grafts/graft.hpp"
#include "grafts/io.hpp"
#include "grafts/join.hpp"
#include "grafts/oracle.hpp"
#include "grafts/properties.hpp"

#endif  // GRAFTS_GRAFTS_HPP_
