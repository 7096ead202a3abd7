// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "semitopo/antisep.hpp"
#include "semitopo/semiframe.hpp"
#include "semitopo/semitopology.hpp"
#include "semitopo/witness.hpp"

namespace semitopo {

// {"points": [labels...], "opens": [[labels...]...], "mode": "generators"|"full"}
// Emission uses the canonical orders so files round-trip byte-identically.
Semitopology semitopology_from_json(const std::string& text);
std::string semitopology_to_json(const Semitopology& s);

// {"points": [...], "witness": {"p": [["a","b"],["c"]], ...}}
WitnessFunction witness_from_json(const std::string& text);
std::string witness_to_json(const WitnessFunction& w);

// {"elements": [...], "leq": [[a,b]...], "compat": [[a,b]...]}
Semiframe semiframe_from_json(const std::string& text);
std::string semiframe_to_json(const Semiframe& f);

// flat object {"p": "T"|"B"|"F", ...}; must be total
Valuation3 valuation_from_json(const std::string& text, const Universe& u);
std::string valuation_to_json(const Valuation3& f, const Universe& u);

std::string classification_to_json(const Semitopology& s);
std::string soberify_to_json(const SoberifyResult& r, const Semitopology& original);

}  // namespace semitopo
