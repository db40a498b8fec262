#ifndef PCUBE_ISOMORPHISM_HPP
#define PCUBE_ISOMORPHISM_HPP

#include "pcube/graph.hpp"

namespace pcube {

// Backtracking isomorphism test with distance-profile pruning. Intended
// for the small graphs that round-trip checks produce, not for large input.
bool isomorphic(const Graph& g1, const Graph& g2);

} // namespace pcube

#endif
