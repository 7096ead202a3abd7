// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "semitopo/semitopology.hpp"
#include "semitopo/witness.hpp"

namespace semitopo {

// Families of subsets of an n-point universe are encoded as bitmaps over the
// 2^n - 2 nonempty proper subsets (the empty set and the universe are always
// included).  A family code is valid when the resulting family is closed
// under unions.
//
// The validity sweep is data-parallel: the parallel kernel shards the family
// codes across threads and the serial kernel is kept as the reference; both
// produce the identical bitmap.

using FamilyCode = std::uint64_t;

std::uint64_t family_code_count(int n);  // 2^(2^n - 2)

// Decodes a family code into the union-closedness test, without materializing
// the family.
bool family_is_union_closed(int n, FamilyCode code);
bool family_is_intersection_closed(int n, FamilyCode code);

std::vector<bool> union_closed_bitmap_serial(int n);
std::vector<bool> union_closed_bitmap_parallel(int n);

// Independent counting oracle: families closed under intersection that
// contain the empty set and the universe (complement-dual to the opens view).
std::uint64_t count_intersection_closed_serial(int n);
std::uint64_t count_intersection_closed_parallel(int n);

Semitopology semitopology_from_code(int n, FamilyCode code);

// Calls fn on every semitopology on exactly n labelled points, in family-code
// order.  The validity bitmap is computed by the parallel kernel when
// available; the visit order is deterministic either way.
void for_each_semitopology(int n, const std::function<void(const Semitopology&)>& fn);

// As above for all sizes 0..max_n inclusive.
void for_each_semitopology_upto(int max_n, const std::function<void(const Semitopology&)>& fn);

// Random witness function on n points: every point gets 1..3 nonempty
// witness-sets drawn uniformly.
WitnessFunction random_witness(int n, std::mt19937_64& rng);

}  // namespace semitopo
