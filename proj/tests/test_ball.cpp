#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <memory>
#include <set>

#include "coarsekit/ball.hpp"
#include "coarsekit/electric.hpp"

using namespace coarsekit;

namespace {

Presentation f2() { return Presentation::free_group(2); }

Presentation z2() {
    Presentation p;
    p.generators = {"a", "b"};
    p.kind = PresentationKind::Generic;
    p.relators.push_back(parse_word(p, "a b a^-1 b^-1"));
    p.validate();
    return p;
}

// Independent oracle: reduced-word BFS, counting only.
std::size_t free_ball_size_oracle(int rank, int radius) {
    std::set<std::string> seen;
    std::vector<std::vector<Letter>> frontier{{}};
    seen.insert("");
    for (int r = 0; r < radius; ++r) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : frontier) {
            for (int g = 1; g <= rank; ++g) {
                for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
                    if (!w.empty() && w.back() == static_cast<Letter>(-l))
                        continue;
                    auto e = w;
                    e.push_back(l);
                    if (seen.insert(std::string(e.begin(), e.end())).second)
                        next.push_back(std::move(e));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

// Independent oracle: the integer lattice with the l1 metric.
std::size_t lattice_diamond_size(int radius) {
    std::size_t n = 0;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y)
            if (std::abs(x) + std::abs(y) <= radius)
                ++n;
    return n;
}

int lattice_delta2_oracle(int radius) {
    std::vector<std::pair<int, int>> pts;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y)
            if (std::abs(x) + std::abs(y) <= radius)
                pts.emplace_back(x, y);
    auto d = [](std::pair<int, int> p, std::pair<int, int> q) {
        return std::abs(p.first - q.first) + std::abs(p.second - q.second);
    };
    int best = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                for (std::size_t e = c + 1; e < pts.size(); ++e) {
                    int s1 = d(pts[a], pts[b]) + d(pts[c], pts[e]);
                    int s2 = d(pts[a], pts[c]) + d(pts[b], pts[e]);
                    int s3 = d(pts[a], pts[e]) + d(pts[b], pts[c]);
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - lo;
                    best = std::max(best, hi - mid);
                }
    return best;
}

} // namespace

TEST_CASE("free ball sizes match the independent BFS oracle") {
    auto p = f2();
    CHECK(generate_ball(p, 0).size() == 1);
    CHECK(generate_ball(p, 1).size() == 5);
    CHECK(generate_ball(p, 2).size() == 17);
    for (int r = 1; r <= 5; ++r)
        CHECK(generate_ball(p, r).size() == static_cast<int>(free_ball_size_oracle(2, r)));
}

TEST_CASE("ball vertices are shortlex sorted, prefix closed, with symmetric edges") {
    auto ball = generate_ball(f2(), 3);
    for (int v = 1; v < ball.size(); ++v) {
        CHECK(shortlex_less(ball.word(v - 1), ball.word(v)));
        CHECK(ball.vertex_of(ball.word(v).prefix(ball.word(v).size() - 1)).has_value());
    }
    for (const auto& [u, v, l] : ball.edges()) {
        CHECK(ball.word(u).append(l) == ball.word(v));
        CHECK(ball.distance(u, v) == 1);
        CHECK(ball.distance(v, u) == 1);
    }
}

TEST_CASE("lattice ball from the commutator presentation matches the diamond") {
    auto p = z2();
    CHECK(generate_ball(p, 2).size() == static_cast<int>(lattice_diamond_size(2)));
    CHECK(generate_ball(p, 2).size() == 13);
    CHECK(generate_ball(p, 4).size() == 41);
}

TEST_CASE("lattice ball distances agree with the l1 oracle") {
    auto ball = generate_ball(z2(), 4);
    // Abelianization coordinates identify each vertex.
    auto coords = [&](int v) {
        int x = 0, y = 0;
        for (Letter l : ball.word(v).letters()) {
            if (generator_of(l) == 0)
                x += l > 0 ? 1 : -1;
            else
                y += l > 0 ? 1 : -1;
        }
        return std::make_pair(x, y);
    };
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < ball.size(); ++v)
        CHECK(seen.insert(coords(v)).second);
    for (int u = 0; u < ball.size(); ++u)
        for (int v = u + 1; v < ball.size(); ++v) {
            auto [ux, uy] = coords(u);
            auto [vx, vy] = coords(v);
            CHECK(ball.distance(u, v) == std::abs(ux - vx) + std::abs(uy - vy));
        }
}

TEST_CASE("dehn-kind ball of the surface group has consistent small spheres") {
    Presentation p;
    p.generators = {"a", "b", "c", "d"};
    p.kind = PresentationKind::Dehn;
    p.relators.push_back(parse_word(p, "a b a^-1 b^-1 c d c^-1 d^-1"));
    p.validate();
    auto b1 = generate_ball(p, 1);
    CHECK(b1.size() == 9);
    auto b2 = generate_ball(p, 2);
    // No relator of length 8 can merge words of length <= 2, so sphere 2 is free.
    CHECK(b2.size() == 9 + 8 * 7);
}

TEST_CASE("metric axioms hold exhaustively on small balls") {
    for (const auto& pres : {f2(), z2()}) {
        auto ball = generate_ball(pres, 3);
        const int n = ball.size();
        for (int u = 0; u < n; ++u) {
            CHECK(ball.distance(u, u) == 0);
            for (int v = u + 1; v < n; ++v) {
                CHECK(ball.distance(u, v) == ball.distance(v, u));
                CHECK(ball.distance(u, v) > 0);
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n; ++w)
                    CHECK(ball.distance(u, w) <= ball.distance(u, v) + ball.distance(v, w));
    }
}

TEST_CASE("gromov products") {
    auto p = f2();
    auto ball = generate_ball(p, 4);
    Word one;
    Word a = parse_word(p, "a");
    Word b = parse_word(p, "b");
    CHECK(gromov_product(ball, a, b, a) == Rat(0));
    CHECK(gromov_product(ball, a, b, one) == Rat(0));
    CHECK(gromov_product(ball, parse_word(p, "a a"), parse_word(p, "a a a"), one) == Rat(2));

    // Tree formula: (x|y)_1 equals the common prefix length.
    for (int x = 0; x < ball.size(); x += 7)
        for (int y = 0; y < ball.size(); y += 11) {
            Rat g = gromov_product(ball, ball.word(x), ball.word(y), one);
            CHECK(g == Rat(common_prefix_length(ball.word(x), ball.word(y))));
        }

    CHECK_THROWS_AS(gromov_product(ball, parse_word(p, "a a a a a"), b, one), DomainError);
}

TEST_CASE("gromov product is bounded by distances to the base point") {
    auto ball = generate_ball(f2(), 3);
    for (int x = 0; x < ball.size(); x += 3)
        for (int y = 0; y < ball.size(); y += 5)
            for (int z = 0; z < ball.size(); z += 7) {
                Rat g = gromov_product(ball, ball.word(x), ball.word(y), ball.word(z));
                CHECK(g >= Rat(0));
                CHECK(g <= Rat(std::min(ball.distance(x, z), ball.distance(y, z))));
            }
}

TEST_CASE("free balls are 0-hyperbolic, lattice balls are not") {
    auto f = generate_ball(f2(), 3);
    auto df = estimate_delta(f, 0, 1);
    CHECK(df.exhaustive);
    CHECK(df.delta == Rat(0));

    auto z4 = generate_ball(z2(), 4);
    auto dz4 = estimate_delta(z4, 0, 1);
    CHECK(dz4.exhaustive);
    CHECK(dz4.delta > Rat(0));
    CHECK(dz4.delta == Rat(lattice_delta2_oracle(4), 2));

    auto z6 = generate_ball(z2(), 6);
    auto dz6 = estimate_delta(z6, 0, 1);
    CHECK(dz6.exhaustive);
    CHECK(dz6.delta > dz4.delta);
}

TEST_CASE("delta of a tiny ball is zero by convention") {
    auto ball = generate_ball(Presentation::free_group(1), 1);
    CHECK(ball.size() == 3);
    CHECK(estimate_delta(ball, 10, 7).delta == Rat(0));
}

TEST_CASE("sampled delta is deterministic given the seed") {
    auto ball = generate_ball(f2(), 5);   // 485 vertices, above the exhaustive threshold
    auto d1 = estimate_delta(ball, 500, 42);
    auto d2 = estimate_delta(ball, 500, 42);
    CHECK_FALSE(d1.exhaustive);
    CHECK(d1.delta == d2.delta);
    CHECK(d1.delta == Rat(0));
}

TEST_CASE("coned-off cosets collapse coset diameters to one") {
    auto p = f2();
    auto ball = std::make_shared<CayleyBall>(generate_ball(p, 5));

    // Left cosets of <a>: group vertices by the coset key "strip trailing a's".
    std::map<std::string, std::vector<int>> cosets;
    for (int v = 0; v < ball->size(); ++v) {
        Word w = ball->word(v);
        while (!w.empty() && generator_of(w.back()) == 0)
            w = w.prefix(w.size() - 1);
        cosets[w.bytes()].push_back(v);
    }
    std::vector<std::vector<int>> subsets;
    for (auto& [k, vs] : cosets)
        subsets.push_back(vs);
    auto electric = cone_off(ball, subsets);

    Word one;
    int v1 = ball->require_vertex(one);
    int va5 = ball->require_vertex(parse_word(p, "a a a a a"));
    int vba5 = ball->require_vertex(parse_word(p, "b a a a a"));
    int vbam5 = ball->require_vertex(parse_word(p, "b a^-1 a^-1 a^-1 a^-1"));
    CHECK(electric.distance(v1, va5) == Rat(1));
    CHECK(electric.distance(vba5, vbam5) == Rat(1));
    CHECK(electric.distance(va5, vba5) == Rat(3));

    // Electric distance never exceeds the base distance.
    for (int u = 0; u < ball->size(); u += 17)
        for (int v = 0; v < ball->size(); v += 23)
            CHECK(electric.distance(u, v) <= Rat(ball->distance(u, v)));
}

TEST_CASE("adding a coned subset never increases electric distance") {
    auto p = f2();
    auto ball = std::make_shared<CayleyBall>(generate_ball(p, 3));
    std::vector<int> axis;
    for (int v = 0; v < ball->size(); ++v) {
        const Word& w = ball->word(v);
        bool onAxis = true;
        for (Letter l : w.letters())
            if (generator_of(l) != 0)
                onAxis = false;
        if (onAxis)
            axis.push_back(v);
    }
    std::vector<int> bAxis;
    for (int v = 0; v < ball->size(); ++v) {
        const Word& w = ball->word(v);
        if (!w.empty() && generator_of(w.at(0)) == 1) {
            bool tail = true;
            for (int i = 1; i < w.size(); ++i)
                if (generator_of(w.at(i)) != 0)
                    tail = false;
            if (tail)
                bAxis.push_back(v);
        }
    }
    auto small = cone_off(ball, {axis});
    auto large = cone_off(ball, {axis, bAxis});
    for (int u = 0; u < ball->size(); ++u)
        for (int v = u + 1; v < ball->size(); ++v)
            CHECK(large.distance(u, v) <= small.distance(u, v));
}

TEST_CASE("cone_off rejects an empty subset") {
    auto ball = std::make_shared<CayleyBall>(generate_ball(f2(), 2));
    CHECK_THROWS_AS(cone_off(ball, {std::vector<int>{}}), DomainError);
}

TEST_CASE("vertex cap fails loudly") {
    BallOptions opts;
    opts.vertexCap = 10;
    CHECK_THROWS_AS(generate_ball(f2(), 3, opts), DomainError);
}
