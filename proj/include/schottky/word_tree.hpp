#ifndef SCHOTTKY_WORD_TREE_HPP
#define SCHOTTKY_WORD_TREE_HPP

#include <cstddef>
#include <vector>

#include "schottky/schottky_group.hpp"

// Level-by-level enumeration of reduced words over the generator indices.
// Each word (j0, ..., j_{d-1}) carries a tagpoint
//
//     iota_{j0} o iota_{j1} o ... o iota_{j_{d-2}} (seed_{j_{d-1}}),
//
// a boundary point inside the isometric ball of generator j0.  Tagpoints at
// depth d sample the limit set and provide the evaluation points for the
// transition-matrix entries.

namespace schottky {

using Word = std::vector<int>;

struct WordNode {
    Word word; // reduced; word[0] is the outermost reflection
    BoundaryPoint tagpoint;
    int tag = 0; // first letter
};

inline constexpr std::size_t default_node_cap = 10'000'000;

// One deterministic seed per generator: the center pushed a Heisenberg step
// of length 0.01 * radius along the phase of lambda, strictly inside the
// ball and away from the pole.  Covariant under conjugation of the whole
// configuration.
std::vector<BoundaryPoint> seed_tagpoints(const SchottkyConfig& cfg);

// Number of reduced words of length depth over m involutive generators:
// m * (m-1)^(depth-1).  Throws resource_limit_error past cap.
std::size_t word_count(std::size_t num_generators, int depth, std::size_t cap = default_node_cap);

// All reduced words of length depth in level order (letters ascending,
// parents in discovery order), with tagpoints.  Throws configuration_error
// for malformed configs, resource_limit_error past the node cap.
std::vector<WordNode> enumerate_words(const SchottkyConfig& cfg, int depth,
    std::size_t cap = default_node_cap);

// The depth-d tagpoints only: a point cloud converging to the limit set.
std::vector<BoundaryPoint> limit_set_sample(const SchottkyConfig& cfg, int depth,
    std::size_t cap = default_node_cap);

} // namespace schottky

#endif
