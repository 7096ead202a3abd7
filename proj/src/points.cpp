// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/points.hpp"

#include <sstream>

namespace semitopo {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxPoints)
        throw Error("universe has " + std::to_string(labels_.size()) +
                    " points; the cap is " + std::to_string(kMaxPoints));
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, fresh] = index_.emplace(labels_[i], i);
        if (!fresh) throw Error("duplicate point label '" + labels_[i] + "'");
    }
}

Universe Universe::indexed(int n) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (int i = 0; i < n; ++i) ls.push_back(std::to_string(i));
    return Universe(std::move(ls));
}

int Universe::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error("unknown point label '" + label + "'");
    return it->second;
}

int Universe::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

Mask Universe::set_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index(l));
    return m;
}

std::vector<std::string> Universe::labels_of(Mask m) const {
    std::vector<std::string> out;
    SEMITOPO_FOR_POINTS(p, m) out.push_back(label(p));
    return out;
}

std::string Universe::to_string(Mask m) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    SEMITOPO_FOR_POINTS(p, m) {
        if (!first) os << ',';
        os << label(p);
        first = false;
    }
    os << '}';
    return os.str();
}

Mask Universe::parse_set(const std::string& comma_list) const {
    Mask m = 0;
    std::string cur;
    std::istringstream is(comma_list);
    while (std::getline(is, cur, ',')) {
        // trim spaces
        size_t b = cur.find_first_not_of(" \t");
        size_t e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        m |= bit(index(cur.substr(b, e - b + 1)));
    }
    return m;
}

}  // namespace semitopo
