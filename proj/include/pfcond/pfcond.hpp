// Copyright 2026 The pfcond authors
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

#pragma once

#include "pfcond/blocks.hpp"
#include "pfcond/condensation.hpp"
#include "pfcond/embedding.hpp"
#include "pfcond/families.hpp"
#include "pfcond/graph.hpp"
#include "pfcond/identities.hpp"
#include "pfcond/io.hpp"
#include "pfcond/kasteleyn.hpp"
#include "pfcond/matchings.hpp"
#include "pfcond/ordered_set.hpp"
#include "pfcond/pfaffian.hpp"
#include "pfcond/ring.hpp"
#include "pfcond/rng.hpp"
#include "pfcond/subsets.hpp"
#include "pfcond/suites.hpp"
#include "pfcond/superposition.hpp"
