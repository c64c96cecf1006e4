// Copyright 2026 The lslab Authors
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


#ifndef LSLAB_LSLAB_HPP_
#define LSLAB_LSLAB_HPP_

#include "lslab/adversary.hpp"
#include "lslab/bench.hpp"
#include "lslab/functions.hpp"
#include "lslab/grid.hpp"
#include "lslab/grid2d.hpp"
#include "lslab/instance_io.hpp"
#include "lslab/instances.hpp"
#include "lslab/oracle.hpp"
#include "lslab/radical.hpp"
#include "lslab/rng.hpp"
#include "lslab/solvers.hpp"
#include "lslab/verify.hpp"
#include "lslab/walkstats.hpp"

#endif  // LSLAB_LSLAB_HPP_
