#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "coarsekit/ccomplex.hpp"

using namespace coarsekit;

namespace {

Presentation f2() { return Presentation::free_group(2); }

CoreGraph subgroup_of(const std::vector<std::string>& texts) {
    auto p = f2();
    std::vector<Word> gens;
    for (const auto& t : texts)
        gens.push_back(parse_word(p, t));
    return CoreGraph::fold_words(2, gens);
}

PatternSpace pattern_of(const CoreGraph& h, int windowRadius, int ballRadius) {
    auto ball = std::make_shared<CayleyBall>(generate_ball(f2(), ballRadius));
    auto pred = SubgroupPredicate::from_core(h);
    // Family = joins of the cosets in the conjugator window, built inside the
    // larger ball.
    CayleyBall window = generate_ball(f2(), windowRadius);
    CosetDecomposition dec = enumerate_cosets(pred, window);
    PatternSpace out;
    out.space = ball;
    for (const CosetId& c : dec.cosets) {
        JoinSet j = coset_join(*ball, pred, c, default_far_pair_threshold(ballRadius));
        FamilySet fam;
        fam.label = format_word(f2(), c.rep);
        fam.cosetRep = c.rep;
        fam.vertices = j.vertices;
        fam.degenerate = j.degenerate;
        out.family.push_back(std::move(fam));
    }
    return out;
}

} // namespace

TEST_CASE("exact complex of a malnormal subgroup has no edges") {
    CoreGraph a = subgroup_of({"a"});
    CComplex c = build_exact_radius(a, 4);
    CHECK(c.vertices.size() > 1);
    for (const auto& s : c.simplices)
        CHECK(s.size() == 1);
    auto st = stats(c);
    CHECK(st.maxCellDimension == 0);
    CHECK(st.maxCliqueSize == 1);
}

TEST_CASE("exact complex of the square subgroup has the expected edge") {
    auto p = f2();
    CoreGraph a2 = subgroup_of({"a a"});
    CComplex c = build_exact_radius(a2, 4);
    // Edge between the identity coset and the a-coset.
    int v1 = -1, va = -1;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (c.vertices[i].rep.empty())
            v1 = static_cast<int>(i);
        if (c.vertices[i].rep == parse_word(p, "a"))
            va = static_cast<int>(i);
    }
    REQUIRE(v1 >= 0);
    REQUIRE(va >= 0);
    CHECK(c.has_simplex({std::min(v1, va), std::max(v1, va)}));
    // No triples anywhere.
    for (const auto& s : c.simplices)
        CHECK(s.size() <= 2);
    auto st = stats(c);
    CHECK(st.maxCellDimension == 1);
    CHECK(st.maxCliqueSize == 2);
}

TEST_CASE("radius-zero window yields a single vertex") {
    CoreGraph a = subgroup_of({"a"});
    CComplex c = build_exact_radius(a, 0);
    CHECK(c.vertices.size() == 1);
    REQUIRE(c.simplices.size() == 1);
    CHECK(c.simplices[0] == std::vector<int>{0});
    auto st = stats(c);
    CHECK(st.maxCellDimension == 0);
    CHECK(st.maxCliqueSize == 1);
}

TEST_CASE("empty complex stats are zero by convention") {
    CComplex empty;
    auto st = stats(empty);
    CHECK(st.maxCellDimension == 0);
    CHECK(st.maxCliqueSize == 0);
}

TEST_CASE("complexes are downward closed") {
    CoreGraph h = subgroup_of({"a", "b b"});
    CComplex c = build_exact_radius(h, 3);
    for (const auto& s : c.simplices) {
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            if (s.size() == 1)
                continue;
            std::vector<int> face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip)
                    face.push_back(s[i]);
            CHECK(c.has_simplex(face));
        }
    }
}

TEST_CASE("coarse complex agrees with the exact one on the shared window") {
    // Measured agreement band for k = 2, window 3, ball 6: thresholds 5..8.
    for (const auto& texts : std::vector<std::vector<std::string>>{
             {"a"}, {"a a"}, {"a b"}, {"a", "b b"}}) {
        CoreGraph h = subgroup_of(texts);
        CComplex exact = build_exact_radius(h, 3);
        PatternSpace pat = pattern_of(h, 3, 6);
        for (int threshold : {5, 8}) {
            CComplex coarse = build_coarse(pat, threshold, 2);
            REQUIRE(exact.vertices.size() == coarse.vertices.size());
            CHECK(exact.simplices == coarse.simplices);
        }
    }
    // The malnormal generator alone already agrees at threshold 4.
    CoreGraph a = subgroup_of({"a"});
    CComplex exact = build_exact_radius(a, 3);
    CComplex coarse = build_coarse(pattern_of(a, 3, 6), 4, 2);
    CHECK(exact.simplices == coarse.simplices);
}

TEST_CASE("bounded-overlap pairs drop out above the overlap diameter") {
    // Two coset lines of the cyclic subgroup overlap coarsely near their
    // bridge only; any threshold above that overlap diameter keeps them
    // independent while the genuinely shared axis stays an edge.
    CoreGraph a2 = subgroup_of({"a a"});
    PatternSpace pat = pattern_of(a2, 2, 6);
    CComplex coarse = build_coarse(pat, 5, 2);
    auto p = f2();
    int v1 = -1, va = -1, vb = -1;
    for (std::size_t i = 0; i < coarse.vertices.size(); ++i) {
        if (coarse.vertices[i].rep.empty())
            v1 = static_cast<int>(i);
        if (coarse.vertices[i].rep == parse_word(p, "a"))
            va = static_cast<int>(i);
        if (coarse.vertices[i].rep == parse_word(p, "b"))
            vb = static_cast<int>(i);
    }
    REQUIRE((v1 >= 0 && va >= 0 && vb >= 0));
    CHECK(coarse.has_simplex({std::min(v1, va), std::max(v1, va)}));
    CHECK_FALSE(coarse.has_simplex({std::min(v1, vb), std::max(v1, vb)}));
}

TEST_CASE("max clique of the complex equals the subgroup width") {
    for (const auto& texts : std::vector<std::vector<std::string>>{
             {"a"}, {"a a"}, {"a b"}, {"a", "b b"}}) {
        CoreGraph h = subgroup_of(texts);
        CComplex c = build_exact_radius(h, 3);
        CHECK(stats(c).maxCliqueSize == width(h, 3).value);
    }
}

TEST_CASE("translation-induced pairing is an isomorphism, a swapped one is not") {
    auto p = f2();
    CoreGraph a2 = subgroup_of({"a a"});
    SubgroupPredicate pred = SubgroupPredicate::from_core(a2);
    CComplex c1 = build_exact_radius(a2, 3);

    // Image window: translate every coset by b on the left.
    Word t = parse_word(p, "b");
    std::vector<CosetId> imageWindow;
    for (const auto& c : c1.vertices)
        imageWindow.push_back(CosetId{coset_canonical_rep(pred, Word::concat(t, c.rep))});
    CComplex c2 = build_exact(a2, imageWindow);

    std::vector<int> phi(c1.vertices.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        phi[i] = static_cast<int>(i);
    auto iso = isomorphic_under(phi, c1, c2);
    CHECK(iso.isomorphic);

    // Identity on the same complex is an isomorphism.
    CHECK(isomorphic_under(phi, c1, c1).isomorphic);

    // Swap an edge endpoint with a non-incident vertex. The identity coset
    // and the a-coset are joined; find a vertex joined to neither.
    int v1 = -1, va = -1;
    for (std::size_t i = 0; i < c1.vertices.size(); ++i) {
        if (c1.vertices[i].rep.empty())
            v1 = static_cast<int>(i);
        if (c1.vertices[i].rep == parse_word(p, "a"))
            va = static_cast<int>(i);
    }
    REQUIRE(v1 >= 0);
    REQUIRE(va >= 0);
    int lonely = -1;
    for (std::size_t i = 0; i < c1.vertices.size(); ++i) {
        bool incident = false;
        for (const auto& s : c1.simplices)
            if (s.size() == 2 && (s[0] == static_cast<int>(i) || s[1] == static_cast<int>(i)))
                incident = true;
        if (!incident) {
            lonely = static_cast<int>(i);
            break;
        }
    }
    REQUIRE(lonely >= 0);
    std::vector<int> bad(phi);
    std::swap(bad[static_cast<std::size_t>(va)], bad[static_cast<std::size_t>(lonely)]);
    auto broken = isomorphic_under(bad, c1, c1);
    CHECK_FALSE(broken.isomorphic);
    REQUIRE(broken.violation.has_value());
    CHECK(broken.violation->size() == 2);

    // Non-bijective pairings are rejected.
    std::vector<int> collapse(phi);
    collapse[0] = collapse[1];
    CHECK_THROWS_AS(isomorphic_under(collapse, c1, c1), DomainError);
}

TEST_CASE("dot export lists vertices and skeleton edges") {
    CoreGraph a2 = subgroup_of({"a a"});
    CComplex c = build_exact_radius(a2, 2);
    std::string dot = to_dot(c, f2());
    CHECK(dot.find("graph ccomplex {") == 0);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
}
