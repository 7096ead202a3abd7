// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "semitopo/logic3.hpp"

namespace semitopo {

// Tags denote the value sets {T,B}, {F}, {F,B}, {T}.
enum class Tag { TB, FF, FB, TT };

Tag neg_tag(Tag t);  // TB <-> FB, FF <-> TT
bool tag_contains(Tag t, Three v);
std::string tag_name(Tag t);
Tag parse_tag(const std::string& name);

struct TagEntry {
    Tag tag;
    PredPtr pred;
};

// A tag-sequent: a finite set of tagged closed predicates.  Valid when every
// valuation makes some entry's predicate land in its tag.
struct TagSequent {
    std::vector<TagEntry> entries;
};

// Semantic validity by exhausting all 3^n valuations.
bool sequent_valid(const TagSequent& sigma, const Universe& u);

// Syntax-directed derivability; agrees with validity.  Derived connectives
// are rewritten to the core {~, &, []T, K, forall} via the stated equivalences.
bool derive(const TagSequent& sigma, const Universe& u);

// One "tag: predicate" per line; blank lines and '#' comments skipped.
TagSequent parse_sequent(const std::string& text, const Universe& u);

}  // namespace semitopo
