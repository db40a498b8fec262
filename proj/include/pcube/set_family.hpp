#ifndef PCUBE_SET_FAMILY_HPP
#define PCUBE_SET_FAMILY_HPP

#include <string>
#include <vector>

#include "pcube/graph.hpp"

namespace pcube {

// Family of distinct finite subsets of an ordered ground set. Members are
// stored as sorted element indices into the ground list.
class SetFamily {
public:
    // Throws DuplicateVertex (repeated ground element), UnknownVertex
    // (member element not in ground), DuplicateEdge is not used here;
    // repeated members throw DuplicateMember.
    static SetFamily build(const std::vector<std::string>& ground,
                           const std::vector<std::vector<std::string>>& sets);
    static SetFamily from_indices(std::vector<std::string> ground,
                                  std::vector<std::vector<int>> members);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<std::vector<int>>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    // Canonical printable form of a member, e.g. "{a,c}".
    std::string member_label(int i) const;
    std::vector<std::string> member_elements(int i) const;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<int>> members_;
};

int symmetric_difference_size(const std::vector<int>& p, const std::vector<int>& q);

// Graph on the members, edges where the symmetric difference is a
// singleton. Vertex labels are the canonical member forms.
Graph family_graph(const SetFamily& fam);

// Member indices R with P∩Q ⊆ R ⊆ P∪Q. Cross-checked against metric
// betweenness, which coincides on finite sets. Throws NotAMember.
std::vector<int> interval(const SetFamily& fam, int p, int q);

struct WellGradedResult {
    bool well_graded = true;
    // When false: an adjacent pair (interval = {P,Q}) at distance > 1.
    std::pair<int, int> witness{-1, -1};
};

WellGradedResult is_well_graded(const SetFamily& fam);

// Family of intersections with ∪F \ ∩F; ground shrinks accordingly.
// Throws EmptyFamily.
SetFamily retraction(const SetFamily& fam);

} // namespace pcube

#endif
