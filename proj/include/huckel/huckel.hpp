// Copyright 2026 The huckel-bounds Authors
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

#ifndef HUCKEL_HUCKEL_HPP_
#define HUCKEL_HUCKEL_HPP_

#include "huckel/bounds.hpp"
#include "huckel/constructions.hpp"
#include "huckel/finite_field.hpp"
#include "huckel/graph.hpp"
#include "huckel/graph6.hpp"
#include "huckel/oracle.hpp"
#include "huckel/spectral.hpp"
#include "huckel/srg.hpp"

#endif  // HUCKEL_HUCKEL_HPP_
