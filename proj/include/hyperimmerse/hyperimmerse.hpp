// Copyright 2026 The HyperImmerse Authors
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

#include "hyperimmerse/decide.hpp"
#include "hyperimmerse/derivation.hpp"
#include "hyperimmerse/dewetting.hpp"
#include "hyperimmerse/hypergraph.hpp"
#include "hyperimmerse/immersion.hpp"
#include "hyperimmerse/isomorphism.hpp"
#include "hyperimmerse/json_io.hpp"
#include "hyperimmerse/lattice.hpp"
#include "hyperimmerse/multigraph.hpp"
#include "hyperimmerse/ordinary.hpp"
#include "hyperimmerse/quantum.hpp"
#include "hyperimmerse/table1.hpp"
#include "hyperimmerse/text_format.hpp"
