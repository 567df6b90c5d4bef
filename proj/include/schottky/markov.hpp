#ifndef SCHOTTKY_MARKOV_HPP
#define SCHOTTKY_MARKOV_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "schottky/word_tree.hpp"

// The expanding Markov partition at refinement depth d is indexed by the
// reduced words of length d; block (j0, ..., j_{d-1}) sits inside the
// isometric ball of generator j0 and the piecewise map acts on it by
// iota_{j0}.  The transition matrix holds one contraction factor per
// admissible transition, evaluated at the successor's tagpoint.

namespace schottky {

// Contraction-factor convention for the matrix entries: `det` uses the
// squared Cygan scaling |lambda|^4 / d^4 (the classical determinant-style
// entry), `cygan` the scaling |lambda|^2 / d^2 itself.  Entrywise the det
// matrix is the square of the cygan matrix, so the two dimension estimates
// differ by an exact factor of two.
enum class Convention { det, cygan };

// Successor blocks of w under the shift: (j0,...,j_{n-1}) -> (j1,...,j_{n-1},j)
// for every letter j != j_{n-1}.  Throws std::domain_error on a non-reduced
// word.
std::vector<Word> admissible_successors(const Word& w, int num_generators);

// Square nonnegative matrix of contraction factors, indexed by the level-d
// words in enumeration order.  Dense storage up to dense_limit, compressed
// rows above.
class TransitionMatrix {
public:
    static constexpr std::size_t dense_limit = 4096;

    // rows[i] holds the (column, value) pairs of row i, columns ascending.
    TransitionMatrix(std::vector<Word> words,
        std::vector<std::vector<std::pair<std::size_t, double>>> rows);

    std::size_t dim() const noexcept { return dim_; }
    bool dense() const noexcept { return dense_storage_; }

    double entry(std::size_t row, std::size_t col) const;

    // y = T x
    void mat_vec(std::span<const double> x, std::span<double> y) const;

    const std::vector<Word>& words() const noexcept { return words_; }

    // Row index of a word; throws std::out_of_range for foreign words.
    std::size_t index_of(const Word& w) const;

    // Columns with positive entries in a row, ascending.
    std::vector<std::size_t> support_of_row(std::size_t row) const;

    // Same support, every positive value mapped through f.
    template <typename F>
    TransitionMatrix mapped(F&& f) const
    {
        TransitionMatrix out(*this);
        if (dense_storage_) {
            for (double& x : out.values_)
                if (x > 0.0)
                    x = f(x);
        } else {
            for (double& x : out.values_)
                x = f(x);
        }
        return out;
    }

    double max_entry() const noexcept;

    // True iff the support digraph is strongly connected.
    bool strongly_connected() const;

private:
    std::size_t dim_ = 0;
    bool dense_storage_ = true;
    std::vector<double> values_; // dense: dim*dim row-major; sparse: nonzeros
    std::vector<std::size_t> row_ptr_; // sparse only, size dim+1
    std::vector<std::size_t> col_; // sparse only
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
};

// Assemble the depth-d transition matrix of cfg: entry(a -> b) is the
// contraction factor of iota_{a[0]} at the tagpoint of b, for every
// admissible successor b of a.  Throws singularity_error if a tagpoint
// collides with a pole (impossible for valid configs; guarded regardless).
TransitionMatrix transition_matrix(const SchottkyConfig& cfg, int depth,
    Convention convention = Convention::det, std::size_t cap = default_node_cap);

} // namespace schottky

#endif
