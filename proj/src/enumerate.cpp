// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/enumerate.hpp"

namespace semitopo {

namespace {

// candidate subsets are the nonempty proper ones, indexed 1..2^n-2 by their mask
int candidate_count(int n) { return n == 0 ? 0 : (1 << n) - 2; }

// family members for a code: masks m with bit (m-1) set, plus 0 and all
template <typename Fn>
void family_members(int n, FamilyCode code, Fn&& fn) {
    fn(Mask{0});
    const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    if (all != 0) fn(all);
    for (int i = 0; i < candidate_count(n); ++i)
        if ((code >> i) & 1) fn(static_cast<Mask>(i + 1));
}

bool in_family(int n, FamilyCode code, Mask m) {
    const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    if (m == 0 || m == all) return true;
    return (code >> (m - 1)) & 1;
}

}  // namespace

std::uint64_t family_code_count(int n) {
    if (n > 4) throw Error("family enumeration above 4 points is not supported");
    return std::uint64_t{1} << candidate_count(n);
}

bool family_is_union_closed(int n, FamilyCode code) {
    bool ok = true;
    family_members(n, code, [&](Mask a) {
        if (!ok) return;
        family_members(n, code, [&](Mask b) {
            if (!ok) return;
            if (!in_family(n, code, a | b)) ok = false;
        });
    });
    return ok;
}

bool family_is_intersection_closed(int n, FamilyCode code) {
    bool ok = true;
    family_members(n, code, [&](Mask a) {
        if (!ok) return;
        family_members(n, code, [&](Mask b) {
            if (!ok) return;
            if (!in_family(n, code, a & b)) ok = false;
        });
    });
    return ok;
}

std::vector<bool> union_closed_bitmap_serial(int n) {
    const std::uint64_t total = family_code_count(n);
    std::vector<bool> valid(total);
    for (std::uint64_t code = 0; code < total; ++code)
        valid[code] = family_is_union_closed(n, code);
    return valid;
}

std::vector<bool> union_closed_bitmap_parallel(int n) {
    const std::uint64_t total = family_code_count(n);
    // vector<char> avoids the bit-packed data race under concurrent writes
    std::vector<char> valid(total);
#ifdef SEMITOPO_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code)
        valid[code] = family_is_union_closed(n, static_cast<FamilyCode>(code));
    return std::vector<bool>(valid.begin(), valid.end());
}

std::uint64_t count_intersection_closed_serial(int n) {
    const std::uint64_t total = family_code_count(n);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code)
        if (family_is_intersection_closed(n, code)) ++count;
    return count;
}

std::uint64_t count_intersection_closed_parallel(int n) {
    const std::uint64_t total = family_code_count(n);
    std::uint64_t count = 0;
#ifdef SEMITOPO_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code)
        if (family_is_intersection_closed(n, static_cast<FamilyCode>(code))) ++count;
    return count;
}

Semitopology semitopology_from_code(int n, FamilyCode code) {
    std::vector<Mask> fam;
    family_members(n, code, [&](Mask m) { fam.push_back(m); });
    return Semitopology(Universe::indexed(n), fam, Semitopology::Mode::full);
}

void for_each_semitopology(int n, const std::function<void(const Semitopology&)>& fn) {
    std::vector<bool> valid = union_closed_bitmap_parallel(n);
    for (std::uint64_t code = 0; code < valid.size(); ++code)
        if (valid[code]) fn(semitopology_from_code(n, code));
}

void for_each_semitopology_upto(int max_n, const std::function<void(const Semitopology&)>& fn) {
    for (int n = 0; n <= max_n; ++n) for_each_semitopology(n, fn);
}

WitnessFunction random_witness(int n, std::mt19937_64& rng) {
    if (n <= 0) throw Error("random_witness needs at least one point");
    const Mask all = (Mask{1} << n) - 1;
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::uniform_int_distribution<Mask> set_dist(1, all);
    std::vector<std::vector<Mask>> table(n);
    for (int p = 0; p < n; ++p) {
        int k = count_dist(rng);
        for (int i = 0; i < k; ++i) table[p].push_back(set_dist(rng));
    }
    return WitnessFunction(Universe::indexed(n), std::move(table));
}

}  // namespace semitopo
