/*
   Copyright 2026 The tmon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TMON_TMON_HPP
#define TMON_TMON_HPP

#include "arith.hpp"
#include "brauer.hpp"
#include "error.hpp"
#include "etale.hpp"
#include "matrix.hpp"
#include "parametrize.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "subspace.hpp"

#endif  // TMON_TMON_HPP
