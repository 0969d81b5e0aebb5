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

#ifndef CAPELLI_WORK_COUNTER_HPP
#define CAPELLI_WORK_COUNTER_HPP

#include <cstdint>

namespace capelli {

// Counts multiplications in the prime field. The counter is thread-local and
// only read through ScopedWorkCount, so the arithmetic itself stays pure.
namespace detail {
inline thread_local std::uint64_t prime_field_mults = 0;
}

inline void count_mults(std::uint64_t n) { detail::prime_field_mults += n; }

class ScopedWorkCount {
   public:
    ScopedWorkCount() : start_(detail::prime_field_mults) {}
    std::uint64_t elapsed() const { return detail::prime_field_mults - start_; }

   private:
    std::uint64_t start_;
};

}  // namespace capelli

#endif
