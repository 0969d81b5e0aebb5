/*
   Copyright 2026 The capelli Authors

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

#ifndef CAPELLI_CAPELLI_HPP
#define CAPELLI_CAPELLI_HPP

#include "bench.hpp"
#include "bignat.hpp"
#include "certificate_json.hpp"
#include "criterion.hpp"
#include "extension_field.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "polytext.hpp"
#include "prime_field.hpp"
#include "primes.hpp"
#include "probability.hpp"
#include "tower.hpp"
#include "work_counter.hpp"

#endif
