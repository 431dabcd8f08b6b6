// Copyright 2026 The zxrw Authors
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

#include "zxrw/bench.hpp"
#include "zxrw/big_uint.hpp"
#include "zxrw/bit_matrix.hpp"
#include "zxrw/circuit.hpp"
#include "zxrw/contract.hpp"
#include "zxrw/decomposition.hpp"
#include "zxrw/diagram.hpp"
#include "zxrw/errors.hpp"
#include "zxrw/gflow.hpp"
#include "zxrw/graph.hpp"
#include "zxrw/heuristics.hpp"
#include "zxrw/json_io.hpp"
#include "zxrw/oracle.hpp"
#include "zxrw/phase.hpp"
#include "zxrw/pipeline.hpp"
#include "zxrw/plug.hpp"
#include "zxrw/scalar.hpp"
#include "zxrw/simplify.hpp"
