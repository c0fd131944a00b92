#include "coarsekit/ball.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coarsekit/detail/folder.hpp"
#include "coarsekit/rng.hpp"

namespace coarsekit {

namespace {

// Abelianized image, a cheap equality prune for the Dehn-oracle BFS.
std::vector<int> exponent_vector(const Word& w, int rank) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    for (Letter l : w.letters())
        e[static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
    return e;
}

struct BallData {
    std::vector<Word> words;
    // (u, positive letter, v) with u * letter = v, canonical words.
    std::vector<std::tuple<Word, Letter, Word>> edges;
    bool explicitEdges = false;
};

// Free-group ball: plain shortlex BFS over reduced words; edges are derived
// from word appends afterwards.
std::vector<Word> free_ball_words(int rank, int radius, std::size_t cap) {
    std::vector<Word> words;
    words.emplace_back();
    std::size_t layerBegin = 0;
    for (int r = 1; r <= radius; ++r) {
        std::size_t layerEnd = words.size();
        for (std::size_t i = layerBegin; i < layerEnd; ++i) {
            for (int rk = 0; rk < 2 * rank; ++rk) {
                Letter l = letter_from_rank(rk);
                const Word& w = words[i];
                if (!w.empty() && w.back() == inverse_letter(l))
                    continue;
                words.push_back(w.append(l));
                if (words.size() > cap)
                    throw DomainError("ball vertex cap exceeded");
            }
        }
        layerBegin = layerEnd;
    }
    return words;
}

// Equality-oracle BFS for user-declared Dehn presentations. Each element is
// kept once under its shortlex-least geodesic word (minimal representatives
// are closed under prefixes, so layer order discovers them directly).
BallData dehn_ball(const Presentation& p, int radius, std::size_t cap) {
    bool evenRelators = true;
    bool zeroExpRelators = true;
    for (const Word& r : p.relators) {
        if (r.size() % 2 != 0)
            evenRelators = false;
        for (int e : exponent_vector(r, p.rank()))
            if (e != 0)
                zeroExpRelators = false;
    }
    std::vector<Word> known;
    known.emplace_back();
    std::vector<std::vector<int>> expOf{exponent_vector(Word(), p.rank())};

    auto resolve = [&](const Word& c) -> int {
        std::vector<int> ce = exponent_vector(c, p.rank());
        for (std::size_t j = 0; j < known.size(); ++j) {
            if (evenRelators && (known[j].size() - c.size()) % 2 != 0)
                continue;
            if (zeroExpRelators && expOf[j] != ce)
                continue;
            if (known[j] == c || dehn_trivial(p, Word::concat(c, known[j].inverse())))
                return static_cast<int>(j);
        }
        return -1;
    };

    std::size_t layerBegin = 0;
    for (int r = 1; r <= radius; ++r) {
        std::size_t layerEnd = known.size();
        for (std::size_t i = layerBegin; i < layerEnd; ++i) {
            for (int rk = 0; rk < 2 * p.rank(); ++rk) {
                Word c = known[i].append(letter_from_rank(rk));
                if (c.size() < r)
                    continue;   // element already enumerated in an earlier layer
                if (resolve(c) < 0) {
                    known.push_back(c);
                    expOf.push_back(exponent_vector(c, p.rank()));
                    if (known.size() > cap)
                        throw DomainError("ball vertex cap exceeded");
                }
            }
        }
        layerBegin = layerEnd;
    }

    BallData out;
    out.words = known;
    out.explicitEdges = true;
    // Uniform edge pass: resolve every one-letter product inside the ball.
    for (std::size_t i = 0; i < known.size(); ++i) {
        for (int g = 1; g <= p.rank(); ++g) {
            int j = resolve(known[i].append(static_cast<Letter>(g)));
            if (j >= 0)
                out.edges.emplace_back(known[i], static_cast<Letter>(g), known[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}



// Windowed relator closure: build the free tree on a slightly larger radius,
// identify w with w*rho for every cyclic rotation rho of a relator whose
// endpoint stays in the window, fold, then keep the classes within the
// requested radius. Identifications are always sound; ones whose witnesses
// leave the window are missed, which is the documented generic-kind caveat.
BallData generic_ball(const Presentation& p, int radius, const BallOptions& opts) {
    int maxRel = 0;
    for (const Word& r : p.relators)
        maxRel = std::max(maxRel, r.size());
    int slack = opts.genericSlack >= 0 ? opts.genericSlack : maxRel;
    int treeR = radius + slack;

    std::vector<Word> tree = free_ball_words(p.rank(), treeR, opts.vertexCap);
    std::unordered_map<std::string, int> treeIndex;
    treeIndex.reserve(tree.size() * 2);
    for (std::size_t i = 0; i < tree.size(); ++i)
        treeIndex.emplace(tree[i].bytes(), static_cast<int>(i));

    detail::Folder folder(static_cast<int>(tree.size()), 2 * p.rank());
    for (std::size_t i = 0; i < tree.size(); ++i) {
        if (tree[i].empty())
            continue;
        Word parent = tree[i].prefix(tree[i].size() - 1);
        int pi = treeIndex.at(parent.bytes());
        Letter l = tree[i].back();
        folder.set_edge(pi, letter_rank(l), static_cast<int>(i));
        folder.set_edge(static_cast<int>(i), letter_rank(inverse_letter(l)), pi);
    }
    folder.settle();

    std::vector<Word> rotations;
    for (const Word& rel : p.relators) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<Letter> base = dir ? rel.inverse().letters() : rel.letters();
            for (std::size_t k = 0; k < base.size(); ++k) {
                std::vector<Letter> rho;
                for (std::size_t t = 0; t < base.size(); ++t)
                    rho.push_back(base[(k + t) % base.size()]);
                rotations.push_back(Word::reduce(rho));
            }
        }
    }
    for (std::size_t i = 0; i < tree.size(); ++i) {
        for (const Word& rho : rotations) {
            Word target = Word::concat(tree[i], rho);
            auto it = treeIndex.find(target.bytes());
            if (it != treeIndex.end()) {
                folder.merge(static_cast<int>(i), it->second);
                folder.settle();
            }
        }
    }

    // BFS over classes from the identity, keep distance <= radius.
    std::vector<int> dist(tree.size(), -1);
    std::deque<int> queue;
    int root = folder.find(0);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] >= radius)
            continue;
        for (int rk = 0; rk < 2 * p.rank(); ++rk) {
            int w = folder.step(u, rk);
            if (w >= 0 && dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    std::unordered_map<int, Word> repOf;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        int c = folder.find(static_cast<int>(i));
        if (dist[static_cast<std::size_t>(c)] < 0)
            continue;
        auto it = repOf.find(c);
        if (it == repOf.end() || shortlex_less(tree[i], it->second))
            repOf.insert_or_assign(c, tree[i]);
    }

    BallData out;
    out.explicitEdges = true;
    for (auto& [c, w] : repOf)
        out.words.push_back(w);
    for (auto& [c, w] : repOf) {
        for (int g = 1; g <= p.rank(); ++g) {
            int t = folder.step(c, letter_rank(static_cast<Letter>(g)));
            if (t < 0)
                continue;
            auto it = repOf.find(t);
            if (it != repOf.end())
                out.edges.emplace_back(w, static_cast<Letter>(g), it->second);
        }
    }
    return out;
}

} // namespace

std::optional<int> CayleyBall::vertex_of(const Word& w) const {
    auto it = index_.find(w.bytes());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int CayleyBall::require_vertex(const Word& w) const {
    auto v = vertex_of(w);
    if (!v)
        throw DomainError("word is not a vertex of the ball: length " + std::to_string(w.size()));
    return *v;
}

std::string CayleyBall::vertex_name(int v) const {
    return format_word(pres_, word(v));
}

int CayleyBall::distance(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw DomainError("vertex out of range");
    if (tree_)
        return tree_distance(word(u), word(v));
    return MetricSpace::distance(u, v);
}

int CayleyBall::diameter() const {
    if (tree_)
        return 2 * radius_;
    if (size() <= 6000)
        return MetricSpace::diameter();
    return 2 * radius_;   // upper bound; exact value unused at this size
}

void CayleyBall::finalize_edges() {
    adj_.assign(words_.size(), {});
    std::set<std::tuple<int, int, Letter>> seen(edges_.begin(), edges_.end());
    edges_.assign(seen.begin(), seen.end());
    for (const auto& [u, v, l] : edges_) {
        (void)l;
        adj_[static_cast<std::size_t>(u)].push_back(v);
        if (u != v)
            adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

CayleyBall generate_ball(const Presentation& p, int radius, const BallOptions& opts) {
    p.validate();
    if (radius < 0)
        throw DomainError("radius must be nonnegative");
    BallData data;
    switch (p.kind) {
    case PresentationKind::Free:
        data.words = free_ball_words(p.rank(), radius, opts.vertexCap);
        break;
    case PresentationKind::Dehn:
        data = dehn_ball(p, radius, opts.vertexCap);
        break;
    case PresentationKind::Generic:
        data = generic_ball(p, radius, opts);
        break;
    }
    if (data.words.size() > opts.vertexCap)
        throw DomainError("ball vertex cap exceeded");

    CayleyBall ball;
    ball.pres_ = p;
    ball.radius_ = radius;
    ball.tree_ = p.kind == PresentationKind::Free;
    ball.words_ = std::move(data.words);
    std::sort(ball.words_.begin(), ball.words_.end(), shortlex_less);
    ball.index_.clear();
    for (std::size_t i = 0; i < ball.words_.size(); ++i)
        ball.index_.emplace(ball.words_[i].bytes(), static_cast<int>(i));

    if (data.explicitEdges) {
        for (const auto& [uw, l, vw] : data.edges)
            ball.edges_.emplace_back(ball.require_vertex(uw), ball.require_vertex(vw), l);
    } else {
        for (std::size_t i = 0; i < ball.words_.size(); ++i) {
            for (int g = 1; g <= p.rank(); ++g) {
                auto j = ball.vertex_of(ball.words_[i].append(static_cast<Letter>(g)));
                if (j)
                    ball.edges_.emplace_back(static_cast<int>(i), *j, static_cast<Letter>(g));
                auto k = ball.vertex_of(ball.words_[i].append(static_cast<Letter>(-g)));
                if (k)
                    ball.edges_.emplace_back(*k, static_cast<int>(i), static_cast<Letter>(g));
            }
        }
    }
    ball.finalize_edges();
    return ball;
}

Rat gromov_product(const CayleyBall& b, const Word& x, const Word& y, const Word& z) {
    int xi = b.require_vertex(x);
    int yi = b.require_vertex(y);
    int zi = b.require_vertex(z);
    int num = b.distance(xi, zi) + b.distance(yi, zi) - b.distance(xi, yi);
    return Rat(num, 2);
}

namespace {

inline int quad_defect2(int dab, int dcd, int dac, int dbd, int dad, int dbc) {
    int s1 = dab + dcd;
    int s2 = dac + dbd;
    int s3 = dad + dbc;
    int hi = std::max(s1, std::max(s2, s3));
    int lo = std::min(s1, std::min(s2, s3));
    int mid = s1 + s2 + s3 - hi - lo;
    return hi - mid;
}

} // namespace

DeltaEstimate estimate_delta(const CayleyBall& b, std::uint64_t sampleCount,
                             std::uint64_t seed, int exhaustiveThreshold) {
    DeltaEstimate out;
    out.seed = seed;
    const int n = b.size();
    if (n < 4) {
        out.delta = Rat(0);
        out.exhaustive = true;
        return out;
    }
    if (n <= exhaustiveThreshold) {
        std::vector<std::vector<int>> d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.distance(i, j);
        }
        int best = 0;
        std::uint64_t count = 0;
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e)
                    for (int f = e + 1; f < n; ++f) {
                        ++count;
                        int def = quad_defect2(d[a][c], d[e][f], d[a][e], d[c][f], d[a][f], d[c][e]);
                        if (def > best)
                            best = def;
                    }
        out.delta = Rat(best, 2);
        out.exhaustive = true;
        out.samples = count;
        return out;
    }
    // Seeded sample drawn from a fixed pool of source vertices so distance
    // rows stay bounded on non-tree balls.
    SplitMix64 rng(seed);
    const int poolSize = std::min(n, 64);
    std::vector<int> pool;
    std::set<int> chosen;
    while (static_cast<int>(pool.size()) < poolSize) {
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (chosen.insert(v).second)
            pool.push_back(v);
    }
    int best = 0;
    for (std::uint64_t s = 0; s < sampleCount; ++s) {
        int idx[4];
        for (int k = 0; k < 4; ++k) {
            bool fresh;
            do {
                idx[k] = pool[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(poolSize)))];
                fresh = true;
                for (int j = 0; j < k; ++j)
                    if (idx[j] == idx[k])
                        fresh = false;
            } while (!fresh);
        }
        int def = quad_defect2(b.distance(idx[0], idx[1]), b.distance(idx[2], idx[3]),
                               b.distance(idx[0], idx[2]), b.distance(idx[1], idx[3]),
                               b.distance(idx[0], idx[3]), b.distance(idx[1], idx[2]));
        if (def > best)
            best = def;
    }
    out.delta = Rat(best, 2);
    out.exhaustive = false;
    out.samples = sampleCount;
    return out;
}

} // namespace coarsekit
