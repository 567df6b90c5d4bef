#include "schottky/markov.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace schottky {

std::vector<Word> admissible_successors(const Word& w, int num_generators)
{
    if (w.empty())
        throw std::domain_error("admissible_successors: empty word");
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] == w[k + 1])
            throw std::domain_error("admissible_successors: word is not reduced");
    for (int letter : w)
        if (letter < 0 || letter >= num_generators)
            throw std::domain_error("admissible_successors: letter out of range");

    Word shifted(w.begin() + 1, w.end());
    shifted.push_back(0);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(num_generators) - 1);
    for (int j = 0; j < num_generators; ++j) {
        if (j == w.back())
            continue;
        shifted.back() = j;
        out.push_back(shifted);
    }
    return out;
}

TransitionMatrix::TransitionMatrix(std::vector<Word> words,
    std::vector<std::vector<std::pair<std::size_t, double>>> rows)
    : dim_(words.size())
    , dense_storage_(words.size() <= dense_limit)
    , words_(std::move(words))
{
    if (rows.size() != dim_)
        throw std::invalid_argument("TransitionMatrix: row count does not match word count");
    for (std::size_t i = 0; i < dim_; ++i)
        index_.emplace(words_[i], i);

    if (dense_storage_) {
        values_.assign(dim_ * dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (const auto& [j, x] : rows[i]) {
                if (j >= dim_)
                    throw std::invalid_argument("TransitionMatrix: column out of range");
                values_[i * dim_ + j] = x;
            }
    } else {
        row_ptr_.assign(dim_ + 1, 0);
        for (std::size_t i = 0; i < dim_; ++i)
            row_ptr_[i + 1] = row_ptr_[i] + rows[i].size();
        values_.reserve(row_ptr_[dim_]);
        col_.reserve(row_ptr_[dim_]);
        for (std::size_t i = 0; i < dim_; ++i)
            for (const auto& [j, x] : rows[i]) {
                if (j >= dim_)
                    throw std::invalid_argument("TransitionMatrix: column out of range");
                col_.push_back(j);
                values_.push_back(x);
            }
    }
}

double TransitionMatrix::entry(std::size_t row, std::size_t col) const
{
    if (row >= dim_ || col >= dim_)
        throw std::out_of_range("TransitionMatrix::entry: index out of range");
    if (dense_storage_)
        return values_[row * dim_ + col];
    const auto first = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    const auto last = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    const auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col)
        return 0.0;
    return values_[static_cast<std::size_t>(it - col_.begin())];
}

void TransitionMatrix::mat_vec(std::span<const double> x, std::span<double> y) const
{
    assert(x.size() == dim_ && y.size() == dim_);
    if (dense_storage_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            double acc = 0.0;
            const double* row = values_.data() + i * dim_;
            for (std::size_t j = 0; j < dim_; ++j)
                acc += row[j] * x[j];
            y[i] = acc;
        }
    } else {
        for (std::size_t i = 0; i < dim_; ++i) {
            double acc = 0.0;
            for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
                acc += values_[k] * x[col_[k]];
            y[i] = acc;
        }
    }
}

std::size_t TransitionMatrix::index_of(const Word& w) const
{
    const auto it = index_.find(w);
    if (it == index_.end())
        throw std::out_of_range("TransitionMatrix::index_of: unknown word");
    return it->second;
}

std::vector<std::size_t> TransitionMatrix::support_of_row(std::size_t row) const
{
    if (row >= dim_)
        throw std::out_of_range("TransitionMatrix::support_of_row: index out of range");
    std::vector<std::size_t> cols;
    if (dense_storage_) {
        for (std::size_t j = 0; j < dim_; ++j)
            if (values_[row * dim_ + j] > 0.0)
                cols.push_back(j);
    } else {
        for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
            cols.push_back(col_[k]);
    }
    return cols;
}

double TransitionMatrix::max_entry() const noexcept
{
    double best = 0.0;
    for (double x : values_)
        best = std::max(best, x);
    return best;
}

bool TransitionMatrix::strongly_connected() const
{
    if (dim_ == 0)
        return false;

    std::vector<std::vector<std::size_t>> fwd(dim_), bwd(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j : support_of_row(i)) {
            fwd[i].push_back(j);
            bwd[j].push_back(i);
        }

    const auto reaches_all = [this](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<char> seen(dim_, 0);
        std::vector<std::size_t> stack { 0 };
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == dim_;
    };

    return reaches_all(fwd) && reaches_all(bwd);
}

TransitionMatrix transition_matrix(const SchottkyConfig& cfg, int depth,
    Convention convention, std::size_t cap)
{
    const std::vector<WordNode> nodes = enumerate_words(cfg, depth, cap);
    const int m = static_cast<int>(cfg.size());

    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index.emplace(nodes[i].word, i);

    std::vector<Word> words;
    words.reserve(nodes.size());
    for (const WordNode& node : nodes)
        words.push_back(node.word);

    std::vector<std::vector<std::pair<std::size_t, double>>> rows(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const ReflectionGenerator& branch = cfg.generators[static_cast<std::size_t>(nodes[a].word.front())];
        for (const Word& succ : admissible_successors(nodes[a].word, m)) {
            const std::size_t b = index.at(succ);
            const double scaling = distortion_factor(branch, nodes[b].tagpoint);
            rows[a].emplace_back(b, convention == Convention::det ? scaling * scaling : scaling);
        }
        std::sort(rows[a].begin(), rows[a].end());
    }

    return TransitionMatrix(std::move(words), std::move(rows));
}

} // namespace schottky
