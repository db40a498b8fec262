#include "pcube/set_family.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_map>

namespace pcube {

SetFamily SetFamily::build(const std::vector<std::string>& ground,
                           const std::vector<std::vector<std::string>>& sets) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
        if (!index.emplace(ground[i], i).second)
            throw Error("DuplicateVertex", "duplicate ground element: " + ground[i]);

    std::vector<std::vector<int>> members;
    members.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<int> m;
        for (const auto& e : s) {
            auto it = index.find(e);
            if (it == index.end())
                throw Error("UnknownVertex", "member element not in ground set: " + e);
            m.push_back(it->second);
        }
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        members.push_back(std::move(m));
    }
    std::set<std::vector<int>> seen;
    for (const auto& m : members)
        if (!seen.insert(m).second)
            throw Error("DuplicateMember", "repeated member set");
    return from_indices(ground, std::move(members));
}

SetFamily SetFamily::from_indices(std::vector<std::string> ground,
                                  std::vector<std::vector<int>> members) {
    SetFamily fam;
    fam.ground_ = std::move(ground);
    fam.members_ = std::move(members);
    return fam;
}

std::string SetFamily::member_label(int i) const {
    std::string out = "{";
    bool first = true;
    for (int e : members_[i]) {
        if (!first) out += ",";
        out += ground_[e];
        first = false;
    }
    return out + "}";
}

std::vector<std::string> SetFamily::member_elements(int i) const {
    std::vector<std::string> out;
    for (int e : members_[i]) out.push_back(ground_[e]);
    return out;
}

int symmetric_difference_size(const std::vector<int>& p, const std::vector<int>& q) {
    size_t i = 0, j = 0;
    int d = 0;
    while (i < p.size() && j < q.size()) {
        if (p[i] == q[j]) {
            ++i;
            ++j;
        } else if (p[i] < q[j]) {
            ++d;
            ++i;
        } else {
            ++d;
            ++j;
        }
    }
    return d + static_cast<int>((p.size() - i) + (q.size() - j));
}

Graph family_graph(const SetFamily& fam) {
    std::vector<std::string> vs;
    for (int i = 0; i < fam.size(); ++i) vs.push_back(fam.member_label(i));
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < fam.size(); ++i)
        for (int j = i + 1; j < fam.size(); ++j)
            if (symmetric_difference_size(fam.members()[i], fam.members()[j]) == 1)
                es.emplace_back(vs[i], vs[j]);
    return Graph::build(vs, es);
}

std::vector<int> interval(const SetFamily& fam, int p, int q) {
    if (p < 0 || p >= fam.size() || q < 0 || q >= fam.size())
        throw Error("NotAMember", "interval endpoint is not a member of the family");
    const auto& P = fam.members()[p];
    const auto& Q = fam.members()[q];
    std::vector<int> lower, upper;
    std::set_intersection(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(lower));
    std::set_union(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(upper));

    const int dpq = symmetric_difference_size(P, Q);
    std::vector<int> out;
    for (int r = 0; r < fam.size(); ++r) {
        const auto& R = fam.members()[r];
        bool lattice = std::includes(R.begin(), R.end(), lower.begin(), lower.end()) &&
                       std::includes(upper.begin(), upper.end(), R.begin(), R.end());
        // Lattice and metric betweenness coincide on finite sets.
        bool metric = symmetric_difference_size(P, R) + symmetric_difference_size(R, Q) == dpq;
        assert(lattice == metric);
        if (lattice) out.push_back(r);
    }
    return out;
}

WellGradedResult is_well_graded(const SetFamily& fam) {
    for (int p = 0; p < fam.size(); ++p)
        for (int q = p + 1; q < fam.size(); ++q) {
            auto iv = interval(fam, p, q);
            if (iv.size() == 2 &&
                symmetric_difference_size(fam.members()[p], fam.members()[q]) != 1)
                return {false, {p, q}};
        }
    return {};
}

SetFamily retraction(const SetFamily& fam) {
    if (fam.size() == 0)
        throw Error("EmptyFamily", "cannot retract an empty family");
    const int n = static_cast<int>(fam.ground().size());
    std::vector<int> count(n, 0);
    for (const auto& m : fam.members())
        for (int e : m) ++count[e];
    // Keep elements in the union but not in the intersection.
    std::vector<int> remap(n, -1);
    std::vector<std::string> ground;
    for (int e = 0; e < n; ++e)
        if (count[e] > 0 && count[e] < fam.size()) {
            remap[e] = static_cast<int>(ground.size());
            ground.push_back(fam.ground()[e]);
        }
    std::vector<std::vector<int>> members;
    for (const auto& m : fam.members()) {
        std::vector<int> r;
        for (int e : m)
            if (remap[e] >= 0) r.push_back(remap[e]);
        members.push_back(std::move(r));
    }
    return SetFamily::from_indices(std::move(ground), std::move(members));
}

} // namespace pcube
