#include "markov/triple_tree.hpp"

#include <algorithm>
#include <unordered_map>

#include "markov/error.hpp"
#include "markov/parallel.hpp"

namespace markov {

BigInt IntTriple::largest() const {
    const BigInt& m = left > middle ? left : middle;
    return m > right ? m : right;
}

std::string IntTriple::to_string() const {
    return "(" + to_decimal(left) + "," + to_decimal(middle) + "," + to_decimal(right) + ")";
}

Path::Path(std::string_view moves) : moves_(moves) {
    if (moves_.find_first_not_of("LR") != std::string::npos)
        throw DomainError("path must consist of L and R moves: '" + moves_ + "'");
}

Path Path::repeated(Move m, std::size_t count) {
    Path p;
    p.moves_.assign(count, static_cast<char>(m));
    return p;
}

Path Path::child(Move m) const {
    Path p = *this;
    p.moves_.push_back(static_cast<char>(m));
    return p;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.moves_.size() <=> b.moves_.size(); c != 0) return c;
    return a.moves_.compare(b.moves_) <=> 0;
}

SeqTriple root(const Seq& alpha, const Seq& beta) {
    if (alpha.empty() || beta.empty()) throw DomainError("root seeds must be nonempty");
    return {alpha, concat(alpha, beta), beta};
}

SeqTriple move_l(const SeqTriple& v) { return {v.left, concat(v.left, v.middle), v.middle}; }

SeqTriple move_r(const SeqTriple& v) { return {v.middle, concat(v.middle, v.right), v.right}; }

SeqTriple apply(const SeqTriple& v, Move m) { return m == Move::L ? move_l(v) : move_r(v); }

SeqTriple vertex_at(const Seq& alpha, const Seq& beta, const Path& path) {
    SeqTriple v = root(alpha, beta);
    for (char c : path.str()) v = apply(v, static_cast<Move>(c));
    return v;
}

IntTriple chi(const SeqTriple& v) {
    return {integer_sine(v.left), integer_sine(v.middle), integer_sine(v.right)};
}

void traverse(const Seq& alpha, const Seq& beta, std::size_t depth,
              const std::function<void(const TreeEntry&)>& visit, const TraversalOptions& opts) {
    if (depth > opts.max_depth) {
        throw LimitError("depth guard: requested depth " + std::to_string(depth) +
                         " exceeds the maximum of " + std::to_string(opts.max_depth));
    }

    std::vector<Path> paths{Path{}};
    std::vector<SeqTriple> level{root(alpha, beta)};
    for (std::size_t d = 0;; ++d) {
        std::vector<IntTriple> ints(level.size());
        parallel_for(level.size(), opts.threads, [&](std::size_t i) { ints[i] = chi(level[i]); });
        for (std::size_t i = 0; i < level.size(); ++i) {
            visit(TreeEntry{paths[i], level[i], ints[i]});
        }
        if (d == depth) break;

        std::vector<SeqTriple> next(level.size() * 2);
        parallel_for(level.size(), opts.threads, [&](std::size_t i) {
            next[2 * i] = move_l(level[i]);
            next[2 * i + 1] = move_r(level[i]);
        });
        std::vector<Path> next_paths;
        next_paths.reserve(next.size());
        for (const auto& p : paths) {
            next_paths.push_back(p.child(Move::L));
            next_paths.push_back(p.child(Move::R));
        }
        level = std::move(next);
        paths = std::move(next_paths);
    }
}

TreeListing enumerate(const Seq& alpha, const Seq& beta, std::size_t depth,
                      const TraversalOptions& opts) {
    TreeListing out;
    traverse(alpha, beta, depth, [&](const TreeEntry& e) { out.push_back(e); }, opts);
    return out;
}

bool is_markov_triple(const IntTriple& t) {
    const auto& [x, y, z] = t;
    return x * x + y * y + z * z == 3 * x * y * z;
}

std::pair<IntTriple, IntTriple> regular_edge_children(const IntTriple& t) {
    if (!is_markov_triple(t)) throw DomainError("not a Markov triple: " + t.to_string());
    if (t.middle < t.left || t.middle < t.right)
        throw DomainError("middle entry is not the largest: " + t.to_string());
    const auto& [a1, m, a2] = t;
    IntTriple to_left{a1, 3 * m * a1 - a2, m};
    IntTriple to_right{m, 3 * m * a2 - a1, a2};
    return {std::move(to_left), std::move(to_right)};
}

std::vector<Collision> collision_search(const Seq& alpha, const Seq& beta, std::size_t depth,
                                        const TraversalOptions& opts) {
    std::vector<Collision> groups;
    std::unordered_map<std::string, std::size_t> index;  // decimal key -> group
    traverse(
        alpha, beta, depth,
        [&](const TreeEntry& e) {
            BigInt largest = e.ints.largest();
            auto [it, inserted] = index.try_emplace(to_decimal(largest), groups.size());
            if (inserted) groups.push_back(Collision{std::move(largest), {}});
            groups[it->second].members.push_back({e.path, e.ints});
        },
        opts);
    std::erase_if(groups, [](const Collision& c) { return c.members.size() < 2; });
    return groups;
}

}  // namespace markov
