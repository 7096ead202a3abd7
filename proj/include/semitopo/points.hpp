// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace semitopo {

// Point sets are bit vectors over a fixed universe; universes are capped so
// that exhaustive algorithms stay legible when they blow up.
using Mask = std::uint32_t;
inline constexpr int kMaxPoints = 24;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int p) { return (m >> p) & 1u; }
inline Mask bit(int p) { return Mask{1} << p; }
inline bool between(Mask a, Mask b) { return (a & b) != 0; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Canonical order on sets: cardinality first, then bit pattern.
inline bool canonical_less(Mask a, Mask b) {
    int ca = popcount(a), cb = popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// Iterates p over the members of m (ascending).
#define SEMITOPO_FOR_POINTS(p, m)                                       \
    for (int p = 0, p##_done = 0; !p##_done; p##_done = 1)              \
        for (Mask p##_rest = (m);                                       \
             p##_rest && ((p = std::countr_zero(p##_rest)), true);      \
             p##_rest &= p##_rest - 1)

// A finite, ordered set of labelled points. The label order given at
// construction is the canonical point order for the lifetime of the universe.
class Universe {
  public:
    Universe() = default;
    explicit Universe(std::vector<std::string> labels);
    static Universe indexed(int n);  // labels "0", "1", ..., n-1

    int size() const { return static_cast<int>(labels_.size()); }
    Mask all() const { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }
    const std::string& label(int p) const { return labels_.at(p); }
    const std::vector<std::string>& labels() const { return labels_; }

    int index(const std::string& label) const;       // throws on unknown label
    int find(const std::string& label) const;        // -1 on unknown label

    Mask set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;
    std::string to_string(Mask m) const;             // "{a,b,c}"
    Mask parse_set(const std::string& comma_list) const;  // "a,b,c"

    bool operator==(const Universe& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace semitopo
