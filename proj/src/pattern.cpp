#include "coarsekit/pattern.hpp"

#include <algorithm>
#include <set>

namespace coarsekit {

int PatternSpace::member_index(const std::string& label) const {
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family[i].label == label)
            return static_cast<int>(i);
    return -1;
}

const std::vector<int>& PatternSpace::dist_to_member(int idx) const {
    if (fieldCache_.empty())
        fieldCache_.resize(family.size());
    auto& field = fieldCache_[static_cast<std::size_t>(idx)];
    if (field.empty())
        field = space->dist_field(family[static_cast<std::size_t>(idx)].vertices);
    return field;
}

JoinSet coset_join(const CayleyBall& ball, const SubgroupPredicate& s, const CosetId& c,
                   int farPairThreshold, const CosetDecomposition* decomp) {
    JoinSet out;
    out.coset = c;
    out.farPairThreshold = farPairThreshold;

    std::vector<int> trace;
    if (decomp) {
        int want = -1;
        for (std::size_t i = 0; i < decomp->cosets.size(); ++i)
            if (decomp->cosets[i].rep == c.rep)
                want = static_cast<int>(i);
        if (want < 0)
            throw DomainError("coset not present in the decomposition");
        for (int v = 0; v < ball.size(); ++v)
            if (decomp->vertexCoset[static_cast<std::size_t>(v)] == want)
                trace.push_back(v);
    } else {
        for (int v = 0; v < ball.size(); ++v)
            if (s.contains(Word::concat(c.rep.inverse(), ball.word(v))))
                trace.push_back(v);
    }
    if (trace.empty())
        throw DomainError("coset does not meet the ball");

    std::set<int> join;
    bool anyFar = false;
    if (ball.tree_metric()) {
        for (std::size_t i = 0; i < trace.size(); ++i) {
            for (std::size_t j = i + 1; j < trace.size(); ++j) {
                const Word& u = ball.word(trace[i]);
                const Word& v = ball.word(trace[j]);
                if (tree_distance(u, v) < farPairThreshold)
                    continue;
                anyFar = true;
                for (const Word& step : tree_geodesic(u, v))
                    join.insert(ball.require_vertex(step));
            }
        }
    } else {
        for (std::size_t i = 0; i < trace.size(); ++i) {
            for (std::size_t j = i + 1; j < trace.size(); ++j) {
                if (ball.distance(trace[i], trace[j]) < farPairThreshold)
                    continue;
                anyFar = true;
                // All geodesic vertices: d(u,x) + d(x,v) == d(u,v).
                auto du = ball.dist_field({trace[i]});
                auto dv = ball.dist_field({trace[j]});
                int d = du[static_cast<std::size_t>(trace[j])];
                for (int x = 0; x < ball.size(); ++x)
                    if (du[static_cast<std::size_t>(x)] >= 0 && dv[static_cast<std::size_t>(x)] >= 0 &&
                        du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == d)
                        join.insert(x);
            }
        }
    }
    if (!anyFar) {
        out.degenerate = true;
        out.vertices = trace;
        return out;
    }
    out.vertices.assign(join.begin(), join.end());
    return out;
}

std::vector<int> nearest_point_projection(const MetricSpace& g, int x, const std::vector<int>& J) {
    if (J.empty())
        throw DomainError("projection target is empty");
    int best = -1;
    std::vector<int> argmin;
    for (int j : J) {
        int d = g.distance(x, j);
        if (best < 0 || d < best) {
            best = d;
            argmin.clear();
        }
        if (d == best)
            argmin.push_back(j);
    }
    std::sort(argmin.begin(), argmin.end());
    return argmin;
}

int projection_diameter(const MetricSpace& g, const std::vector<int>& Ji, const std::vector<int>& Jj) {
    if (Ji.empty() || Jj.empty())
        throw DomainError("projection needs nonempty sets");
    std::set<int> image;
    for (int x : Ji)
        for (int p : nearest_point_projection(g, x, Jj))
            image.insert(p);
    int diam = 0;
    for (auto it = image.begin(); it != image.end(); ++it)
        for (auto jt = std::next(it); jt != image.end(); ++jt)
            diam = std::max(diam, g.distance(*it, *jt));
    return diam;
}

int set_distance(const MetricSpace& g, const std::vector<int>& A, const std::vector<int>& B) {
    if (A.empty() || B.empty())
        throw DomainError("set distance needs nonempty sets");
    int best = -1;
    for (int a : A)
        for (int b : B) {
            int d = g.distance(a, b);
            if (best < 0 || d < best)
                best = d;
            if (best == 0)
                return 0;
        }
    return best;
}

std::vector<int> discreteness_profile(const SubgroupPredicate& s, int N,
                                      const std::vector<int>& radii,
                                      const ProfileOptions& opts) {
    if (N < 1)
        throw DomainError("N must be at least 1");
    int productCap = opts.maxGromovProduct >= 0 ? opts.maxGromovProduct : N;
    Presentation free = Presentation::free_group(s.genCount);
    std::vector<int> counts;
    for (int radius : radii) {
        CayleyBall ball = generate_ball(free, radius);
        CosetDecomposition dec = enumerate_cosets(s, ball);
        std::vector<std::vector<int>> traces(dec.cosets.size());
        for (int v = 0; v < ball.size(); ++v)
            traces[static_cast<std::size_t>(dec.vertexCoset[static_cast<std::size_t>(v)])].push_back(v);
        int count = 0;
        for (const auto& trace : traces) {
            bool qualifies = false;
            for (std::size_t i = 0; i < trace.size() && !qualifies; ++i) {
                const Word& u = ball.word(trace[i]);
                for (std::size_t j = i + 1; j < trace.size() && !qualifies; ++j) {
                    const Word& v = ball.word(trace[j]);
                    int d = tree_distance(u, v);
                    if (d < opts.farPairThreshold)
                        continue;
                    // (u|v)_1 in doubled units.
                    int twoGp = u.size() + v.size() - d;
                    if (twoGp <= 2 * productCap)
                        qualifies = true;
                }
            }
            if (qualifies)
                ++count;
        }
        counts.push_back(count);
    }
    return counts;
}

PatternSpace build_coset_pattern(std::shared_ptr<const CayleyBall> ball,
                                 const SubgroupPredicate& s, int farPairThreshold) {
    PatternSpace out;
    out.space = ball;
    CosetDecomposition dec = enumerate_cosets(s, *ball);
    const Presentation& pres = ball->presentation();
    for (const CosetId& c : dec.cosets) {
        JoinSet join = coset_join(*ball, s, c, farPairThreshold, &dec);
        FamilySet fam;
        fam.label = format_word(pres, c.rep);
        fam.cosetRep = c.rep;
        fam.vertices = join.vertices;
        fam.degenerate = join.degenerate;
        out.family.push_back(std::move(fam));
    }
    return out;
}

PatternSpace grid_line_pattern(int width, int height, int spacing) {
    if (spacing < 1)
        throw DomainError("line spacing must be positive");
    auto grid = std::make_shared<GridSpace>(width, height);
    PatternSpace out;
    out.space = grid;
    for (int x = 0; x < width; x += spacing) {
        FamilySet fam;
        fam.label = "x=" + std::to_string(x);
        for (int y = 0; y < height; ++y)
            fam.vertices.push_back(grid->vertex(x, y));
        std::sort(fam.vertices.begin(), fam.vertices.end());
        out.family.push_back(std::move(fam));
    }
    for (int y = 0; y < height; y += spacing) {
        FamilySet fam;
        fam.label = "y=" + std::to_string(y);
        for (int x = 0; x < width; ++x)
            fam.vertices.push_back(grid->vertex(x, y));
        std::sort(fam.vertices.begin(), fam.vertices.end());
        out.family.push_back(std::move(fam));
    }
    return out;
}

} // namespace coarsekit
