/**************************************************************************
 * count_demo.cpp
 *
 * Copyright 2026 The mdscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
// Counts [n,k] MDS codes over a few small fields and compares with the
// three-term asymptotic prediction.
#include <iostream>

#include "mds/mds.hpp"

int main() {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const auto field = mds::make_field_of_order(q);
        const auto census = mds::count_mds_matrix_scan(2, 5, field);
        std::cout << "q=" << q << "  gamma(2,5)=" << census.gamma << "  arcs=" << census.gamma_tilde
                  << "  predicted=" << mds::predicted_gamma(2, 5, q) << "\n";
    }
    const auto p = mds::params(3, 10);
    std::cout << "a2(3,10)=" << p.a2 << " b1=" << p.b1 << " b2=" << p.b2 << "\n";
}
