#include "schottky/word_tree.hpp"

#include <string>
#include <utility>

namespace schottky {

namespace {

    void check_config(const SchottkyConfig& cfg, int depth)
    {
        if (cfg.size() < 2)
            throw configuration_error("word tree: at least 2 generators required");
        if (depth < 1)
            throw std::domain_error("word tree: depth must be >= 1");
    }

} // namespace

std::vector<BoundaryPoint> seed_tagpoints(const SchottkyConfig& cfg)
{
    std::vector<BoundaryPoint> seeds;
    seeds.reserve(cfg.size());
    for (const ReflectionGenerator& g : cfg.generators) {
        const BoundaryPoint offset { 0.01 * g.lambda(), 0.0 };
        seeds.push_back(translate(g.center(), offset));
    }
    return seeds;
}

std::size_t word_count(std::size_t num_generators, int depth, std::size_t cap)
{
    std::size_t count = num_generators;
    for (int level = 2; level <= depth; ++level) {
        count *= num_generators - 1;
        if (count > cap)
            throw resource_limit_error("word tree: " + std::to_string(num_generators) + " generators at depth "
                + std::to_string(depth) + " exceed the node cap of " + std::to_string(cap));
    }
    if (count > cap)
        throw resource_limit_error("word tree: node cap exceeded");
    return count;
}

std::vector<WordNode> enumerate_words(const SchottkyConfig& cfg, int depth, std::size_t cap)
{
    check_config(cfg, depth);
    const int m = static_cast<int>(cfg.size());
    word_count(cfg.size(), depth, cap);

    const std::vector<BoundaryPoint> seeds = seed_tagpoints(cfg);
    std::vector<WordNode> level;
    level.reserve(cfg.size());
    for (int i = 0; i < m; ++i)
        level.push_back(WordNode { Word { i }, seeds[i], i });

    for (int d = 2; d <= depth; ++d) {
        std::vector<WordNode> next;
        next.reserve(level.size() * (m - 1));
        for (int j = 0; j < m; ++j) {
            for (const WordNode& parent : level) {
                if (j == parent.tag) // involutive generators: skip j = inv(first letter)
                    continue;
                WordNode child;
                child.word.reserve(parent.word.size() + 1);
                child.word.push_back(j);
                child.word.insert(child.word.end(), parent.word.begin(), parent.word.end());
                child.tagpoint = apply_reflection(cfg.generators[j], parent.tagpoint);
                child.tag = j;
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<BoundaryPoint> limit_set_sample(const SchottkyConfig& cfg, int depth, std::size_t cap)
{
    std::vector<WordNode> nodes = enumerate_words(cfg, depth, cap);
    std::vector<BoundaryPoint> points;
    points.reserve(nodes.size());
    for (const WordNode& node : nodes)
        points.push_back(node.tagpoint);
    return points;
}

} // namespace schottky
