// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

namespace semitopo {

struct FigureCheck {
    std::string name;
    bool passed;
    std::string detail;  // set when the check fails
};

// Pins every concrete value the catalog spaces are documented with:
// intertwined sets, communities, kernels, minimal closed neighbourhoods,
// partitions, extremal counts, closure values, and the logic truth-table
// spot checks.  Exact equality throughout.
std::vector<FigureCheck> run_figure_checks();

}  // namespace semitopo
