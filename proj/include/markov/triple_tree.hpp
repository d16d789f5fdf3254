#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markov/bigint.hpp"
#include "markov/sequence.hpp"

namespace markov {

struct SeqTriple {
    Seq left;
    Seq middle;
    Seq right;

    friend bool operator==(const SeqTriple&, const SeqTriple&) = default;
};

struct IntTriple {
    BigInt left;
    BigInt middle;
    BigInt right;

    /// Maximum over all three entries; the middle is not assumed largest.
    [[nodiscard]] BigInt largest() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const IntTriple&, const IntTriple&) = default;
};

enum class Move : char { L = 'L', R = 'R' };

/// Address of a vertex as the sequence of moves taken from the root.
class Path {
public:
    Path() = default;
    /// Accepts a string over {L, R}. Throws DomainError otherwise.
    explicit Path(std::string_view moves);

    static Path repeated(Move m, std::size_t count);

    [[nodiscard]] std::size_t depth() const { return moves_.size(); }
    [[nodiscard]] const std::string& str() const { return moves_; }
    [[nodiscard]] Path child(Move m) const;

    friend bool operator==(const Path&, const Path&) = default;
    /// Breadth-first order: shorter paths first, then L before R.
    friend std::strong_ordering operator<=>(const Path& a, const Path& b);

private:
    std::string moves_;
};

struct TreeEntry {
    Path path;
    SeqTriple seqs;
    IntTriple ints;
};

/// Vertices in breadth-first order, L before R within a level.
using TreeListing = std::vector<TreeEntry>;

inline constexpr std::size_t kDefaultMaxDepth = 24;

struct TraversalOptions {
    /// Requests deeper than this are refused with LimitError.
    std::size_t max_depth = kDefaultMaxDepth;
    /// Worker threads for per-level work; 0 picks the hardware count.
    unsigned threads = 0;
};

/// (alpha, alpha+beta, beta). Throws DomainError if either seed is empty.
[[nodiscard]] SeqTriple root(const Seq& alpha, const Seq& beta);

/// L(a, g, b) = (a, a+g, g)
[[nodiscard]] SeqTriple move_l(const SeqTriple& v);
/// R(a, g, b) = (g, g+b, b)
[[nodiscard]] SeqTriple move_r(const SeqTriple& v);
[[nodiscard]] SeqTriple apply(const SeqTriple& v, Move m);

/// Follows `path` from root(alpha, beta) without touching other vertices.
[[nodiscard]] SeqTriple vertex_at(const Seq& alpha, const Seq& beta, const Path& path);

/// Componentwise integer sine.
[[nodiscard]] IntTriple chi(const SeqTriple& v);

/// Streams every vertex of depth <= `depth` to `visit` in breadth-first
/// order. Only one level of sequence triples is held at a time.
void traverse(const Seq& alpha, const Seq& beta, std::size_t depth,
              const std::function<void(const TreeEntry&)>& visit,
              const TraversalOptions& opts = {});

/// All 2^(depth+1) - 1 vertices with their paths and both payloads.
[[nodiscard]] TreeListing enumerate(const Seq& alpha, const Seq& beta, std::size_t depth,
                                    const TraversalOptions& opts = {});

/// x^2 + y^2 + z^2 == 3xyz
[[nodiscard]] bool is_markov_triple(const IntTriple& t);

/// Children of a regular Markov triple (a1, M, a2) given by
/// (a1, 3 M a1 - a2, M) and (M, 3 M a2 - a1, a2).
/// Throws DomainError unless t is a Markov triple whose middle is maximal.
[[nodiscard]] std::pair<IntTriple, IntTriple> regular_edge_children(const IntTriple& t);

struct CollisionMember {
    Path path;
    IntTriple ints;
};

/// Vertices sharing one largest element.
struct Collision {
    BigInt largest;
    std::vector<CollisionMember> members;  // breadth-first order
};

/// Groups the vertices of depth <= `depth` by largest element and returns
/// every group with two or more members, ordered by first occurrence.
[[nodiscard]] std::vector<Collision> collision_search(const Seq& alpha, const Seq& beta,
                                                      std::size_t depth,
                                                      const TraversalOptions& opts = {});

}  // namespace markov
