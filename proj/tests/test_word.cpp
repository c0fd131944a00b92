#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coarsekit/presentation.hpp"
#include "coarsekit/word.hpp"

using namespace coarsekit;

namespace {

Presentation f2() { return Presentation::free_group(2); }

} // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    auto p = f2();
    CHECK(format_word(p, reduce_word(p, parse_letters(p, "a a^-1 b"))) == "b");
    CHECK(format_word(p, reduce_word(p, parse_letters(p, "a b b^-1 a"))) == "a a");
    CHECK(reduce_word(p, parse_letters(p, "a a^-1")).empty());
    CHECK(reduce_word(p, {}).empty());
}

TEST_CASE("reduce_word rejects letters outside the generator range") {
    auto p = f2();
    CHECK_THROWS_AS(reduce_word(p, {static_cast<Letter>(3)}), DomainError);
    CHECK_THROWS_AS(reduce_word(p, {static_cast<Letter>(0)}), DomainError);
}

TEST_CASE("word constructor enforces free reduction") {
    CHECK_THROWS_AS(Word({static_cast<Letter>(1), static_cast<Letter>(-1)}), DomainError);
    CHECK_NOTHROW(Word({static_cast<Letter>(1), static_cast<Letter>(1)}));
}

TEST_CASE("shortlex orders by length then letter rank") {
    auto p = f2();
    Word a = parse_word(p, "a");
    Word ainv = parse_word(p, "a^-1");
    Word b = parse_word(p, "b");
    Word aa = parse_word(p, "a a");
    CHECK(shortlex_less(a, ainv));
    CHECK(shortlex_less(ainv, b));
    CHECK(shortlex_less(b, aa));
    CHECK_FALSE(shortlex_less(aa, b));
}

TEST_CASE("tree distance and geodesics in the free group") {
    auto p = f2();
    Word u = parse_word(p, "a b");
    Word v = parse_word(p, "a a");
    CHECK(tree_distance(u, v) == 2);
    auto path = tree_geodesic(u, v);
    REQUIRE(path.size() == 3);
    CHECK(path[0] == u);
    CHECK(path[1] == parse_word(p, "a"));
    CHECK(path[2] == v);

    // Endpoints coincide: single-vertex path.
    CHECK(tree_geodesic(u, u).size() == 1);
}

TEST_CASE("dehn reduction shortens a word holding more than half a relator") {
    Presentation p;
    p.generators = {"a", "b", "c", "d"};
    p.kind = PresentationKind::Dehn;
    p.relators.push_back(parse_word(p, "a b a^-1 b^-1 c d c^-1 d^-1"));
    p.validate();

    // w is the first five letters of the relator; the complement inverse has
    // three letters, so Dehn reduction must shorten 5 -> 3 and the product
    // w * (result)^-1 must freely equal a cyclic rotation of the relator.
    Word w = parse_word(p, "a b a^-1 b^-1 c");
    Word r = reduce_word(p, w.letters());
    CHECK(r.size() == 3);
    CHECK(format_word(p, r) == "d c d^-1");
    Word closure = Word::concat(w, r.inverse());
    CHECK(closure == p.relators[0]);
}

TEST_CASE("presentation text format round trip") {
    Presentation p = Presentation::parse("# a comment\nkind: generic\na b\na b a^-1 b^-1\n");
    CHECK(p.rank() == 2);
    CHECK(p.kind == PresentationKind::Generic);
    REQUIRE(p.relators.size() == 1);
    CHECK(format_word(p, p.relators[0]) == "a b a^-1 b^-1");

    Presentation f = Presentation::parse("a b\n");
    CHECK(f.kind == PresentationKind::Free);

    CHECK_THROWS_AS(Presentation::parse("a a\n"), DomainError);
    CHECK_THROWS_AS(Presentation::parse("kind: free\na b\na b\n"), DomainError);
}
