#include "coarsekit/rigidity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coarsekit/ball.hpp"

namespace coarsekit {

Pairing Pairing::identity(int n) {
    Pairing p;
    p.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p.map[static_cast<std::size_t>(i)] = i;
    p.inverse = p.map;
    return p;
}

Pairing Pairing::from_map(std::vector<int> phi, int targetSize) {
    Pairing p;
    p.map = std::move(phi);
    p.inverse.assign(static_cast<std::size_t>(targetSize), -1);
    for (std::size_t i = 0; i < p.map.size(); ++i) {
        int im = p.map[i];
        if (im < 0)
            continue;
        if (im >= targetSize || p.inverse[static_cast<std::size_t>(im)] >= 0)
            throw DomainError("pairing is not injective into the target family");
        p.inverse[static_cast<std::size_t>(im)] = static_cast<int>(i);
    }
    return p;
}

Pairing translation_pairing(const PatternSpace& p1, const PatternSpace& p2,
                            const SubgroupPredicate& s, const Word& t) {
    std::map<std::string, int> targetByRep;
    for (std::size_t j = 0; j < p2.family.size(); ++j)
        targetByRep.emplace(p2.family[j].cosetRep.bytes(), static_cast<int>(j));
    std::vector<int> phi(p1.family.size(), -1);
    std::vector<char> used(p2.family.size(), 0);
    for (std::size_t i = 0; i < p1.family.size(); ++i) {
        Word image = coset_canonical_rep(s, Word::concat(t, p1.family[i].cosetRep));
        auto it = targetByRep.find(image.bytes());
        if (it != targetByRep.end() && !used[static_cast<std::size_t>(it->second)]) {
            phi[i] = it->second;
            used[static_cast<std::size_t>(it->second)] = 1;
        }
    }
    return Pairing::from_map(std::move(phi), static_cast<int>(p2.family.size()));
}

MeetingBall minimal_meeting_ball(const PatternSpace& p, const std::vector<int>& indices,
                                 TieBreak tie) {
    if (indices.empty())
        throw DomainError("empty family selection");
    const int V = p.space->size();
    std::vector<int> worst(static_cast<std::size_t>(V), 0);
    for (int idx : indices) {
        if (idx < 0 || idx >= static_cast<int>(p.family.size()))
            throw DomainError("family index out of range");
        const auto& field = p.dist_to_member(idx);
        for (int v = 0; v < V; ++v) {
            int d = field[static_cast<std::size_t>(v)];
            if (d < 0)
                d = V;   // unreachable: effectively infinite
            if (d > worst[static_cast<std::size_t>(v)])
                worst[static_cast<std::size_t>(v)] = d;
        }
    }
    MeetingBall out;
    for (int v = 0; v < V; ++v) {
        int w = worst[static_cast<std::size_t>(v)];
        bool better = out.center < 0 || w < out.radius ||
                      (w == out.radius && tie == TieBreak::Highest);
        if (better) {
            out.center = v;
            out.radius = w;
        }
    }
    return out;
}

QMap construct_q(const PatternSpace& p1, const PatternSpace& p2, const Pairing& phi,
                 const QOptions& opts) {
    if (phi.map.size() != p1.family.size())
        throw DomainError("pairing does not cover the source family");
    QMap out;
    out.margin = opts.interiorMargin >= 0 ? opts.interiorMargin : opts.K;
    const int V1 = p1.space->size();
    out.image.assign(static_cast<std::size_t>(V1), -1);
    for (int v = 0; v < V1; ++v)
        if (p1.space->boundary_distance(v) >= out.margin)
            out.interior.push_back(v);

    // Family members passing through N_K(g), per vertex.
    std::vector<std::vector<int>> through(static_cast<std::size_t>(V1));
    for (std::size_t i = 0; i < p1.family.size(); ++i) {
        const auto& field = p1.dist_to_member(static_cast<int>(i));
        for (int v = 0; v < V1; ++v) {
            int d = field[static_cast<std::size_t>(v)];
            if (d >= 0 && d <= opts.K)
                through[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
    }

    std::set<int> interiorSet(out.interior.begin(), out.interior.end());
    for (int v = 0; v < V1; ++v) {
        const auto& members = through[static_cast<std::size_t>(v)];
        std::vector<int> images;
        bool mapped = true;
        for (int i : members) {
            int im = phi.map[static_cast<std::size_t>(i)];
            if (im < 0) {
                mapped = false;
                break;
            }
            images.push_back(im);
        }
        if (!mapped || static_cast<int>(members.size()) <= opts.w2) {
            if (interiorSet.count(v))
                out.undefinedInterior.push_back(v);
            continue;
        }
        out.image[static_cast<std::size_t>(v)] =
            minimal_meeting_ball(p2, images, opts.tie).center;
    }
    return out;
}

void require_total_interior(const QMap& q, const PatternSpace& p1) {
    if (!q.undefinedInterior.empty())
        throw DomainError("K too small at vertex " +
                          p1.space->vertex_name(q.undefinedInterior.front()));
}

namespace {

EnvelopeTable envelope_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    EnvelopeTable t;
    int maxD = 0;
    for (const auto& [d1, d2] : pairs)
        maxD = std::max(maxD, d1);
    t.bound.assign(static_cast<std::size_t>(maxD) + 1, 0);
    for (const auto& [d1, d2] : pairs)
        t.bound[static_cast<std::size_t>(d1)] = std::max(t.bound[static_cast<std::size_t>(d1)], d2);
    for (std::size_t n = 1; n < t.bound.size(); ++n)
        t.bound[n] = std::max(t.bound[n], t.bound[n - 1]);
    for (std::size_t n = 0; n < t.bound.size(); ++n)
        t.maxStretch = std::max(t.maxStretch, t.bound[n] - static_cast<int>(n));
    return t;
}

} // namespace

PropernessReport verify_uniform_properness(const PatternSpace& p1, const PatternSpace& p2,
                                           const Pairing& phi) {
    if (phi.map.size() != p1.family.size())
        throw DomainError("pairing does not cover the source family");
    std::vector<std::pair<int, int>> forward;
    std::vector<std::pair<int, int>> backward;
    for (std::size_t i = 0; i < p1.family.size(); ++i) {
        if (phi.map[i] < 0)
            continue;
        for (std::size_t j = i + 1; j < p1.family.size(); ++j) {
            if (phi.map[j] < 0)
                continue;
            int d1 = set_distance(*p1.space, p1.family[i].vertices, p1.family[j].vertices);
            int d2 = set_distance(*p2.space,
                                  p2.family[static_cast<std::size_t>(phi.map[i])].vertices,
                                  p2.family[static_cast<std::size_t>(phi.map[j])].vertices);
            forward.emplace_back(d1, d2);
            backward.emplace_back(d2, d1);
        }
    }
    if (forward.empty())
        throw DomainError("pairing defines no index pairs");
    PropernessReport out;
    out.forward = envelope_from_pairs(forward);
    out.backward = envelope_from_pairs(backward);
    return out;
}

QiReport verify_qi(const QMap& q, const PatternSpace& p1, const PatternSpace& p2,
                   const Pairing& phi) {
    QiReport out;
    std::vector<int> defined;
    for (int v : q.interior)
        if (q.image[static_cast<std::size_t>(v)] >= 0)
            defined.push_back(v);
    if (defined.size() < 2)
        throw DomainError("too few defined interior vertices");

    // Bucket image distances by source distance.
    std::vector<int> maxD2;
    std::vector<int> minD2;
    auto bucket = [&](int d1, int d2) {
        if (d1 >= static_cast<int>(maxD2.size())) {
            maxD2.resize(static_cast<std::size_t>(d1) + 1, -1);
            minD2.resize(static_cast<std::size_t>(d1) + 1, -1);
        }
        auto& mx = maxD2[static_cast<std::size_t>(d1)];
        auto& mn = minD2[static_cast<std::size_t>(d1)];
        mx = std::max(mx, d2);
        mn = mn < 0 ? d2 : std::min(mn, d2);
    };
    for (std::size_t a = 0; a < defined.size(); ++a) {
        for (std::size_t b = a + 1; b < defined.size(); ++b) {
            int d1 = p1.space->distance(defined[a], defined[b]);
            int d2 = p2.space->distance(q.image[static_cast<std::size_t>(defined[a])],
                                        q.image[static_cast<std::size_t>(defined[b])]);
            bucket(d1, d2);
            ++out.sampleCount;
        }
    }

    // Smallest epsilon over an integer lambda grid, then the smallest lambda.
    int bestLambda = 1;
    int bestEps = -1;
    for (int lambda = 1; lambda <= 8; ++lambda) {
        int eps = 0;
        for (std::size_t d1 = 0; d1 < maxD2.size(); ++d1) {
            if (maxD2[d1] < 0)
                continue;
            eps = std::max(eps, maxD2[d1] - lambda * static_cast<int>(d1));
            eps = std::max(eps, static_cast<int>(d1) - lambda * minD2[d1]);
        }
        if (bestEps < 0 || eps < bestEps) {
            bestEps = eps;
            bestLambda = lambda;
        }
    }
    out.lambda = Rat(bestLambda);
    out.epsilon = Rat(bestEps);

    // Pairing bound h(n): d(g, J_j) <= n must force q(g) within h(n) of the
    // phi-image of J_j.
    std::vector<std::pair<int, int>> hPairs;
    for (std::size_t j = 0; j < p1.family.size(); ++j) {
        if (phi.map[j] < 0)
            continue;
        const auto& f1 = p1.dist_to_member(static_cast<int>(j));
        const auto& f2 = p2.dist_to_member(phi.map[j]);
        for (int v : defined) {
            int d1 = f1[static_cast<std::size_t>(v)];
            int d2 = f2[static_cast<std::size_t>(q.image[static_cast<std::size_t>(v)])];
            if (d1 >= 0 && d2 >= 0)
                hPairs.emplace_back(d1, d2);
        }
    }
    if (!hPairs.empty())
        out.pairingBound = envelope_from_pairs(hPairs).bound;

    // Coarse surjectivity: every interior target vertex lies near the image.
    std::vector<int> imageSet;
    for (int v : defined)
        imageSet.push_back(q.image[static_cast<std::size_t>(v)]);
    std::sort(imageSet.begin(), imageSet.end());
    imageSet.erase(std::unique(imageSet.begin(), imageSet.end()), imageSet.end());
    auto gapField = p2.space->dist_field(imageSet);
    for (int v = 0; v < p2.space->size(); ++v)
        if (p2.space->boundary_distance(v) >= q.margin && gapField[static_cast<std::size_t>(v)] >= 0)
            out.surjectivityGap = std::max(out.surjectivityGap, gapField[static_cast<std::size_t>(v)]);
    return out;
}

namespace {

bool family_connected(const MetricSpace& space, const std::vector<int>& verts) {
    if (verts.empty())
        return false;
    std::set<int> inSet(verts.begin(), verts.end());
    std::set<int> seen{verts[0]};
    std::deque<int> queue{verts[0]};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : space.adjacency()[static_cast<std::size_t>(u)])
            if (inSet.count(w) && seen.insert(w).second)
                queue.push_back(w);
    }
    return seen.size() == inSet.size();
}

} // namespace

AxiomReport check_axioms(const PatternSpace& p, const std::vector<int>& kGrid,
                         const std::vector<int>& nGrid, const AxiomOptions& opts) {
    if (kGrid.empty() || nGrid.empty())
        throw DomainError("axiom grids must be nonempty");
    AxiomReport out;
    out.kGrid = kGrid;
    out.nGrid = nGrid;
    out.condition4N = opts.condition4N;
    const int V = p.space->size();
    const int n = static_cast<int>(p.family.size());
    const int maxK = *std::max_element(kGrid.begin(), kGrid.end());
    const int margin = opts.interiorMargin >= 0 ? opts.interiorMargin : maxK;
    const int cap = opts.violationCap >= 0 ? opts.violationCap : p.space->diameter() * 3 / 4;

    // Duplicate family members violate condition (4) outright.
    std::map<std::string, int> byVerts;
    std::set<int> duplicated;
    for (int i = 0; i < n; ++i) {
        std::string key;
        for (int v : p.family[static_cast<std::size_t>(i)].vertices)
            key += std::to_string(v) + ",";
        auto [it, fresh] = byVerts.try_emplace(key, i);
        if (!fresh) {
            for (int k : kGrid) {
                Condition4Violation viol;
                viol.members = {it->second, i};
                viol.k = k;
                viol.diameter = -1;
                viol.duplicate = true;
                out.violations.push_back(viol);
            }
            duplicated.insert(i);
            duplicated.insert(it->second);
        }
    }

    // Streaming pass over family distance fields: per-vertex member lists
    // within maxK, and exact pair distances up to maxK.
    std::vector<std::vector<std::pair<int, int>>> lists(static_cast<std::size_t>(V));
    for (int i = 0; i < n; ++i) {
        const auto& field = p.space->dist_field(p.family[static_cast<std::size_t>(i)].vertices);
        for (int v = 0; v < V; ++v) {
            int d = field[static_cast<std::size_t>(v)];
            if (d >= 0 && d <= maxK)
                lists[static_cast<std::size_t>(v)].emplace_back(i, d);
        }
    }

    std::vector<char> interior(static_cast<std::size_t>(V), 0);
    for (int v = 0; v < V; ++v)
        interior[static_cast<std::size_t>(v)] = p.space->boundary_distance(v) >= margin;

    // Conditions (1) and (2).
    for (int k : kGrid) {
        int maxCount = 0;
        int minCount = -1;
        for (int v = 0; v < V; ++v) {
            if (!interior[static_cast<std::size_t>(v)])
                continue;
            int count = 0;
            for (const auto& [i, d] : lists[static_cast<std::size_t>(v)])
                if (d <= k)
                    ++count;
            maxCount = std::max(maxCount, count);
            minCount = minCount < 0 ? count : std::min(minCount, count);
        }
        out.M_of_k.push_back(maxCount);
        out.minCount_of_k.push_back(minCount < 0 ? 0 : minCount);
    }

    // Pair set-distances (exact when <= maxK): min over vertices of J_i of
    // the distance to J_j.
    std::map<std::pair<int, int>, int> pairDist;
    for (int v = 0; v < V; ++v) {
        const auto& list = lists[static_cast<std::size_t>(v)];
        for (const auto& [i, di] : list) {
            if (di != 0)
                continue;
            for (const auto& [j, dj] : list) {
                if (j == i)
                    continue;
                auto key = std::make_pair(std::min(i, j), std::max(i, j));
                auto it = pairDist.find(key);
                if (it == pairDist.end())
                    pairDist.emplace(key, dj);
                else
                    it->second = std::min(it->second, dj);
            }
        }
    }

    // Whether a family member touches the interior window.
    std::vector<char> anchored(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int v : p.family[static_cast<std::size_t>(i)].vertices)
            if (interior[static_cast<std::size_t>(v)]) {
                anchored[static_cast<std::size_t>(i)] = 1;
                break;
            }

    // Condition (3): minimal meeting balls over tuples with pairwise
    // distance <= k. Pairs have radius ceil(d/2) exactly (a geodesic
    // midpoint); larger tuples use the subtree Helly property when every
    // member is connected and the space is a tree, otherwise exact search.
    bool treeSpace = false;
    if (auto* ball = dynamic_cast<const CayleyBall*>(p.space.get()))
        treeSpace = ball->tree_metric();
    bool allConnected = true;
    for (int i = 0; i < n && allConnected; ++i)
        allConnected = family_connected(*p.space, p.family[static_cast<std::size_t>(i)].vertices);
    bool hellyOk = treeSpace && allConnected;

    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& [key, d] : pairDist) {
        if (d > maxK)
            continue;
        nbr[static_cast<std::size_t>(key.first)].push_back(key.second);
        nbr[static_cast<std::size_t>(key.second)].push_back(key.first);
    }
    for (auto& x : nbr)
        std::sort(x.begin(), x.end());

    auto pair_d = [&](int i, int j) {
        auto it = pairDist.find({std::min(i, j), std::max(i, j)});
        return it == pairDist.end() ? -1 : it->second;
    };

    for (int k : kGrid) {
        std::vector<int> row;
        for (int tupleSize : nGrid) {
            int worst = -1;
            if (tupleSize < 2) {
                row.push_back(0);
                continue;
            }
            if (tupleSize == 2) {
                for (const auto& [key, d] : pairDist)
                    if (d <= k && anchored[static_cast<std::size_t>(key.first)] &&
                        anchored[static_cast<std::size_t>(key.second)])
                        worst = std::max(worst, (d + 1) / 2);
                row.push_back(worst);
                continue;
            }
            // Enumerate tuples of pairwise-close anchored members.
            std::vector<std::vector<int>> tuples;
            std::vector<int> current;
            auto extend = [&](auto&& self, int last) -> void {
                if (static_cast<int>(current.size()) == tupleSize) {
                    tuples.push_back(current);
                    return;
                }
                for (int j : nbr[static_cast<std::size_t>(last)]) {
                    if (j <= last || !anchored[static_cast<std::size_t>(j)])
                        continue;
                    bool ok = true;
                    for (int m : current) {
                        int d = pair_d(m, j);
                        if (d < 0 || d > k)
                            ok = false;
                    }
                    if (ok) {
                        current.push_back(j);
                        self(self, j);
                        current.pop_back();
                    }
                }
            };
            for (int i = 0; i < n; ++i) {
                if (!anchored[static_cast<std::size_t>(i)])
                    continue;
                current = {i};
                extend(extend, i);
            }
            for (const auto& tuple : tuples) {
                int maxPair = 0;
                for (std::size_t a = 0; a < tuple.size(); ++a)
                    for (std::size_t b = a + 1; b < tuple.size(); ++b)
                        maxPair = std::max(maxPair, pair_d(tuple[a], tuple[b]));
                if (hellyOk) {
                    worst = std::max(worst, (maxPair + 1) / 2);
                } else {
                    MeetingBall mb = minimal_meeting_ball(p, tuple);
                    worst = std::max(worst, mb.radius);
                }
            }
            row.push_back(worst);
        }
        out.K_of_kn.push_back(row);
    }

    // Condition (4): common k-neighborhood diameters for tuples of size N.
    const int N = opts.condition4N;
    for (int k : kGrid) {
        // Group overlap vertices per tuple.
        std::map<std::vector<int>, std::vector<int>> overlap;
        for (int v = 0; v < V; ++v) {
            std::vector<int> close;
            for (const auto& [i, d] : lists[static_cast<std::size_t>(v)])
                if (d <= k)
                    close.push_back(i);
            if (static_cast<int>(close.size()) < N)
                continue;
            std::vector<int> combo;
            auto choose = [&](auto&& self, std::size_t from) -> void {
                if (static_cast<int>(combo.size()) == N) {
                    overlap[combo].push_back(v);
                    return;
                }
                for (std::size_t idx = from; idx < close.size(); ++idx) {
                    combo.push_back(close[idx]);
                    self(self, idx + 1);
                    combo.pop_back();
                }
            };
            choose(choose, 0);
        }
        int worst = -1;
        for (const auto& [tuple, verts] : overlap) {
            bool anch = true;
            for (int i : tuple)
                if (!anchored[static_cast<std::size_t>(i)])
                    anch = false;
            bool dup = false;
            for (int i : tuple)
                if (duplicated.count(i))
                    dup = true;
            int diam = 0;
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    diam = std::max(diam, p.space->distance(verts[a], verts[b]));
            if (!dup && anch)
                worst = std::max(worst, diam);
            if (diam >= cap && !dup) {
                Condition4Violation viol;
                viol.members = tuple;
                viol.k = k;
                viol.diameter = diam;
                out.violations.push_back(viol);
            }
        }
        out.K4_of_k.push_back(worst);
    }
    return out;
}

} // namespace coarsekit
