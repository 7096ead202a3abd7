// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "semitopo/semitopology.hpp"

namespace semitopo {

// Named spaces used throughout the test suites.  The parametric families
// (discrete, trivial, supermajority, all-but-one, more-than-one) take n; the
// figure spaces are fixed.
Semitopology catalog(const std::string& name, int n = -1);

std::vector<std::string> catalog_names();

}  // namespace semitopo
