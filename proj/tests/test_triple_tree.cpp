#include <doctest.h>

#include <set>

#include "markov/error.hpp"
#include "markov/triple_tree.hpp"
#include "oracles.hpp"

using namespace markov;

namespace {
const Seq kOne{1, 1};
const Seq kTwo{2, 2};
}  // namespace

TEST_SUITE("triple_tree") {
    TEST_CASE("root") {
        CHECK(root(kOne, kTwo) == SeqTriple{kOne, Seq{1, 1, 2, 2}, kTwo});
        CHECK(root(Seq{4, 4}, Seq{11, 11}) == SeqTriple{Seq{4, 4}, Seq{4, 4, 11, 11}, Seq{11, 11}});
        CHECK(root(kOne, kOne) == SeqTriple{kOne, Seq{1, 1, 1, 1}, kOne});
        CHECK_THROWS_AS((void)root(Seq{}, kTwo), DomainError);
    }

    TEST_CASE("move_l") {
        SeqTriple l = move_l(root(kOne, kTwo));
        CHECK(l == SeqTriple{kOne, Seq{1, 1, 1, 1, 2, 2}, Seq{1, 1, 2, 2}});
        // Oracle: 3*5*1 - 2 = 13, and the rational route for each entry.
        CHECK(chi(l) == IntTriple{1, 13, 5});
        CHECK(oracle::sine_via_cf({1, 1, 1, 1, 2, 2}) == 13);

        SeqTriple v = root(Seq{4, 4}, Seq{11, 11});
        for (int i = 0; i < 5; ++i) v = move_l(v);
        CHECK(v.middle == concat(repeat(Seq{4, 4}, 6), Seq{11, 11}));
    }

    TEST_CASE("move_r") {
        SeqTriple r = move_r(root(kOne, kTwo));
        CHECK(r == SeqTriple{Seq{1, 1, 2, 2}, Seq{1, 1, 2, 2, 2, 2}, kTwo});
        CHECK(chi(r) == IntTriple{5, 29, 2});

        SeqTriple v = root(Seq{4, 4}, Seq{11, 11});
        for (int i = 0; i < 3; ++i) v = move_r(v);
        CHECK(v.middle == concat(Seq{4, 4}, repeat(Seq{11, 11}, 4)));
    }

    TEST_CASE("chi") {
        CHECK(chi(root(kOne, kTwo)) == IntTriple{1, 5, 2});
        CHECK(chi(root(Seq{4, 4}, Seq{11, 11})) == IntTriple{4, 191, 11});
        Seq s0{4, 4}, s1{11, 11};
        SeqTriple v{concat(s0, repeat(s1, 3)), concat(s0, repeat(s1, 4)), s1};
        CHECK(chi(v) == IntTriple{2888956, 355318099, 11});
    }

    TEST_CASE("path ordering is breadth-first") {
        CHECK(Path("") < Path("L"));
        CHECK(Path("R") < Path("LL"));
        CHECK(Path("LR") < Path("RL"));
        CHECK_THROWS_AS(Path("LX"), DomainError);
        CHECK(Path::repeated(Move::R, 3).str() == "RRR");
    }

    TEST_CASE("enumerate") {
        auto d0 = enumerate(kOne, kTwo, 0);
        REQUIRE(d0.size() == 1);
        CHECK(d0[0].ints == IntTriple{1, 5, 2});

        auto d1 = enumerate(kOne, kTwo, 1);
        REQUIRE(d1.size() == 3);
        CHECK(d1[0].path.str().empty());
        CHECK(d1[1].path.str() == "L");
        CHECK(d1[2].path.str() == "R");
        // Oracle: the regular child formulas applied to (1,5,2) by hand.
        CHECK(d1[1].ints == IntTriple{1, 13, 5});
        CHECK(d1[2].ints == IntTriple{5, 29, 2});

        auto d5 = enumerate(Seq{4, 4}, Seq{11, 11}, 5);
        CHECK(d5.size() == 63);
        auto it = std::find_if(d5.begin(), d5.end(), [](const TreeEntry& e) { return e.path.str() == "LLLLL"; });
        REQUIRE(it != d5.end());
        CHECK(it->ints.middle == 355318099);
    }

    TEST_CASE("enumerate is breadth first, unique, and agrees with vertex_at") {
        auto listing = enumerate(Seq{3}, Seq{5, 2}, 6);
        CHECK(listing.size() == 127);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < listing.size(); ++i) {
            CHECK(seen.insert(listing[i].path.str()).second);
            if (i > 0) CHECK(listing[i - 1].path < listing[i].path);
            CHECK(listing[i].seqs == vertex_at(Seq{3}, Seq{5, 2}, listing[i].path));
            CHECK(listing[i].seqs.middle == concat(listing[i].seqs.left, listing[i].seqs.right));
        }
    }

    TEST_CASE("thread count does not change the listing") {
        auto serial = enumerate(kOne, kTwo, 7, {kDefaultMaxDepth, 1});
        auto parallel = enumerate(kOne, kTwo, 7, {kDefaultMaxDepth, 8});
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].path == parallel[i].path);
            CHECK(serial[i].ints == parallel[i].ints);
        }
    }

    TEST_CASE("depth guard") {
        CHECK_THROWS_AS((void)enumerate(kOne, kTwo, 25), LimitError);
        TraversalOptions tight{3, 1};
        CHECK_THROWS_AS((void)enumerate(kOne, kTwo, 4, tight), LimitError);
        CHECK(enumerate(kOne, kTwo, 3, tight).size() == 15);
    }

    TEST_CASE("is_markov_triple") {
        CHECK(is_markov_triple({1, 5, 2}));
        CHECK(is_markov_triple({1, 1, 1}));
        CHECK_FALSE(is_markov_triple({4, 191, 11}));
    }

    TEST_CASE("regular_edge_children") {
        auto [l, r] = regular_edge_children({1, 5, 2});
        CHECK(l == IntTriple{1, 13, 5});
        CHECK(r == IntTriple{5, 29, 2});

        auto [l1, r1] = regular_edge_children({1, 1, 1});
        CHECK(l1 == IntTriple{1, 2, 1});
        CHECK(r1 == IntTriple{1, 2, 1});

        auto [l2, r2] = regular_edge_children({1, 13, 5});
        CHECK(l2 == IntTriple{1, 34, 13});
        CHECK(r2 == IntTriple{13, 194, 5});
        // Cross-check against the sequence route at path L.
        SeqTriple at_l = vertex_at(kOne, kTwo, Path("L"));
        CHECK(chi(move_l(at_l)) == l2);
        CHECK(chi(move_r(at_l)) == r2);

        CHECK_THROWS_AS((void)regular_edge_children({4, 191, 11}), DomainError);
        CHECK_THROWS_AS((void)regular_edge_children({5, 1, 2}), DomainError);
    }

    TEST_CASE("largest does not assume the middle") {
        CHECK(IntTriple{9, 2, 3}.largest() == 9);
        CHECK(IntTriple{1, 2, 30}.largest() == 30);
    }

    TEST_CASE("collision_search") {
        CHECK(collision_search(kOne, kTwo, 8).empty());

        auto t1 = collision_search(Seq{4, 4}, Seq{11, 11}, 5);
        REQUIRE(t1.size() == 1);
        CHECK(t1[0].largest == 355318099);
        REQUIRE(t1[0].members.size() == 2);
        std::set<std::string> paths{t1[0].members[0].path.str(), t1[0].members[1].path.str()};
        CHECK(paths == std::set<std::string>{"LLLLL", "RRR"});

        auto t2 = collision_search(Seq{14, 14}, Seq{82, 82}, 5);
        REQUIRE(t2.size() == 1);
        std::set<std::string> paths2{t2[0].members[0].path.str(), t2[0].members[1].path.str()};
        CHECK(paths2 == std::set<std::string>{"LLLLL", "RRR"});
        // Oracle: rational route on S_2(0)^6 S_2(1).
        CHECK(t2[0].largest == oracle::sine_via_cf(oracle::pow_concat({14, 14}, 6, {82, 82})));
    }

    TEST_CASE("degenerate equal seeds collide immediately") {
        // (1),(1): root (1,(1,1),1) -> ints (1,1,1); L and R children are mirror images.
        auto c = collision_search(Seq{1}, Seq{1}, 1);
        REQUIRE_FALSE(c.empty());
        CHECK(c[0].members.size() >= 2);
    }
}
