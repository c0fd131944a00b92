#include "coarsekit/subgroup.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace coarsekit {

SubgroupPredicate SubgroupPredicate::from_core(CoreGraph g) {
    SubgroupPredicate s;
    s.kind = PredicateKind::CoreGraphKind;
    s.genCount = g.generator_count();
    s.graph = std::move(g);
    return s;
}

SubgroupPredicate SubgroupPredicate::kernel(int genCount) {
    SubgroupPredicate s;
    s.kind = PredicateKind::AbelianizationKernel;
    s.genCount = genCount;
    return s;
}

bool SubgroupPredicate::contains(const Word& w) const {
    if (kind == PredicateKind::CoreGraphKind)
        return graph->accepts(w);
    std::vector<int> e(static_cast<std::size_t>(genCount), 0);
    for (Letter l : w.letters())
        e[static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
    for (int x : e)
        if (x != 0)
            return false;
    return true;
}

bool SubgroupPredicate::infinite() const {
    if (kind == PredicateKind::CoreGraphKind)
        return graph->infinite();
    return genCount >= 2;   // the kernel is trivial over one generator
}

Word coset_canonical_rep(const SubgroupPredicate& s, const Word& g) {
    if (s.kind == PredicateKind::CoreGraphKind)
        return coset_min_word(*s.graph, g);
    // Kernel cosets are exponent vectors; the least representative runs the
    // generators in index order.
    std::vector<int> e(static_cast<std::size_t>(s.genCount), 0);
    for (Letter l : g.letters())
        e[static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
    std::vector<Letter> out;
    for (int i = 0; i < s.genCount; ++i) {
        Letter l = static_cast<Letter>(e[static_cast<std::size_t>(i)] >= 0 ? i + 1 : -(i + 1));
        for (int k = 0; k < std::abs(e[static_cast<std::size_t>(i)]); ++k)
            out.push_back(l);
    }
    return Word(std::move(out));
}

CosetDecomposition enumerate_cosets(const SubgroupPredicate& s, const CayleyBall& ball) {
    if (s.genCount != ball.presentation().rank())
        throw DomainError("subgroup and ball have different generator counts");
    CosetDecomposition out;
    out.vertexCoset.assign(static_cast<std::size_t>(ball.size()), -1);
    std::unordered_map<std::string, int> byRep;
    for (int v = 0; v < ball.size(); ++v) {
        Word rep = coset_canonical_rep(s, ball.word(v));
        auto [it, fresh] = byRep.try_emplace(rep.bytes(), static_cast<int>(out.cosets.size()));
        if (fresh)
            out.cosets.push_back(CosetId{rep});
        out.vertexCoset[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

CoreGraph intersect_conjugate(const CoreGraph& h, const Word& g) {
    return intersect(conjugate_subgroup(h, g), h);
}

namespace {

// Shared machinery for the conjugator scans: essentially distinct conjugates
// are indexed by left cosets gH with a representative of length at most the
// radius; g H g^-1 depends only on the coset.
struct ConjugateScan {
    const CoreGraph& h;
    int radius;
    std::vector<CosetId> cosets;           // canonical order; cosets[0] = H itself
    std::vector<CoreGraph> conjugates;
    std::vector<std::vector<int>> adj;     // pairwise infinite intersection
    mutable std::map<std::string, bool> relativeCache;

    ConjugateScan(const CoreGraph& h_, int radius_) : h(h_), radius(radius_) {
        Presentation free = Presentation::free_group(h.generator_count());
        CayleyBall ball = generate_ball(free, radius);
        SubgroupPredicate pred = SubgroupPredicate::from_core(h);
        CosetDecomposition dec = enumerate_cosets(pred, ball);
        cosets = dec.cosets;
        conjugates.reserve(cosets.size());
        for (const auto& c : cosets)
            conjugates.push_back(conjugate_subgroup(h, c.rep));
        adj.assign(cosets.size(), {});
        for (std::size_t i = 0; i < cosets.size(); ++i)
            for (std::size_t j = i + 1; j < cosets.size(); ++j)
                if (pair_infinite(static_cast<int>(i), static_cast<int>(j))) {
                    adj[i].push_back(static_cast<int>(j));
                    adj[j].push_back(static_cast<int>(i));
                }
        for (auto& nb : adj)
            std::sort(nb.begin(), nb.end());
    }

    // K_i meet K_j is conjugate to H meet (g_i^-1 g_j) H (g_i^-1 g_j)^-1, so
    // infiniteness only depends on the relative coset.
    bool pair_infinite(int i, int j) const {
        Word rel = Word::concat(cosets[static_cast<std::size_t>(i)].rep.inverse(),
                                cosets[static_cast<std::size_t>(j)].rep);
        Word key = coset_min_word(h, rel);
        auto it = relativeCache.find(key.bytes());
        if (it != relativeCache.end())
            return it->second;
        bool inf = intersect(conjugate_subgroup(h, rel), h).infinite();
        relativeCache.emplace(key.bytes(), inf);
        return inf;
    }

    bool adjacent(int i, int j) const {
        const auto& nb = adj[static_cast<std::size_t>(i)];
        return std::binary_search(nb.begin(), nb.end(), j);
    }
};

struct Tuple {
    std::vector<int> members;
    CoreGraph meet;
    int maxLen;
};

// All tuples of essentially distinct conjugates with infinite total
// intersection, by monotone level growth seeded at the singletons.
std::vector<Tuple> total_intersection_tuples(const ConjugateScan& scan) {
    std::vector<Tuple> all;
    std::vector<Tuple> level;
    for (std::size_t i = 0; i < scan.cosets.size(); ++i)
        level.push_back(Tuple{{static_cast<int>(i)},
                              scan.conjugates[i],
                              scan.cosets[i].rep.size()});
    all = level;
    while (!level.empty()) {
        std::vector<Tuple> next;
        for (const Tuple& t : level) {
            for (int j = t.members.back() + 1; j < static_cast<int>(scan.cosets.size()); ++j) {
                bool ok = true;
                for (int m : t.members)
                    if (!scan.adjacent(m, j)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                CoreGraph meet = intersect(t.meet, scan.conjugates[static_cast<std::size_t>(j)]);
                if (!meet.infinite())
                    continue;
                Tuple nt;
                nt.members = t.members;
                nt.members.push_back(j);
                nt.meet = std::move(meet);
                nt.maxLen = std::max(t.maxLen, scan.cosets[static_cast<std::size_t>(j)].rep.size());
                next.push_back(std::move(nt));
            }
        }
        for (const Tuple& t : next)
            all.push_back(t);
        level = std::move(next);
    }
    return all;
}

void clique_search(const ConjugateScan& scan, std::vector<int>& current,
                   const std::vector<int>& candidates, std::vector<int>& best) {
    if (current.size() > best.size())
        best = current;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (current.size() + (candidates.size() - idx) <= best.size())
            return;   // cannot improve
        int v = candidates[idx];
        std::vector<int> nextCand;
        for (std::size_t k = idx + 1; k < candidates.size(); ++k)
            if (scan.adjacent(v, candidates[k]))
                nextCand.push_back(candidates[k]);
        current.push_back(v);
        clique_search(scan, current, nextCand, best);
        current.pop_back();
    }
}

// Deterministic max clique over cosets with representative length <= maxLen;
// the first maximum met in canonical order is the certificate.
std::vector<int> max_clique(const ConjugateScan& scan, int maxLen) {
    std::vector<int> candidates;
    for (std::size_t i = 0; i < scan.cosets.size(); ++i)
        if (scan.cosets[i].rep.size() <= maxLen)
            candidates.push_back(static_cast<int>(i));
    std::vector<int> best;
    std::vector<int> current;
    clique_search(scan, current, candidates, best);
    return best;
}

} // namespace

HeightResult height(const CoreGraph& h, int conjugatorRadius) {
    HeightResult out;
    if (!h.infinite()) {
        out.value = 0;
        out.stabilized = true;
        return out;
    }
    ConjugateScan scan(h, conjugatorRadius);
    std::vector<Tuple> tuples = total_intersection_tuples(scan);
    auto valueAt = [&](int r) {
        int best = 0;
        for (const Tuple& t : tuples)
            if (t.maxLen <= r)
                best = std::max(best, static_cast<int>(t.members.size()));
        return best;
    };
    out.value = valueAt(conjugatorRadius);
    for (const Tuple& t : tuples) {
        if (t.maxLen <= conjugatorRadius && static_cast<int>(t.members.size()) == out.value) {
            for (int m : t.members)
                out.certificate.push_back(scan.cosets[static_cast<std::size_t>(m)]);
            break;
        }
    }
    out.stabilized = conjugatorRadius >= 2 &&
                     valueAt(conjugatorRadius) == valueAt(conjugatorRadius - 1) &&
                     valueAt(conjugatorRadius - 1) == valueAt(conjugatorRadius - 2);
    return out;
}

HeightResult width(const CoreGraph& h, int conjugatorRadius) {
    HeightResult out;
    if (!h.infinite()) {
        out.value = 0;
        out.stabilized = true;
        return out;
    }
    ConjugateScan scan(h, conjugatorRadius);
    std::vector<int> best = max_clique(scan, conjugatorRadius);
    out.value = static_cast<int>(best.size());
    for (int m : best)
        out.certificate.push_back(scan.cosets[static_cast<std::size_t>(m)]);
    int v1 = static_cast<int>(max_clique(scan, conjugatorRadius - 1).size());
    int v2 = static_cast<int>(max_clique(scan, std::max(0, conjugatorRadius - 2)).size());
    out.stabilized = conjugatorRadius >= 2 && out.value == v1 && v1 == v2;
    return out;
}

MalnormalResult is_malnormal(const CoreGraph& h, int conjugatorRadius) {
    MalnormalResult out;
    if (!h.infinite()) {
        out.malnormal = true;   // finite (here: trivial) subgroups vacuously
        out.stabilized = true;
        return out;
    }
    ConjugateScan scan(h, conjugatorRadius);
    int witnessLen = -1;
    for (std::size_t i = 1; i < scan.cosets.size(); ++i) {
        if (intersect(scan.conjugates[i], h).infinite()) {
            out.witness = scan.cosets[i].rep;
            witnessLen = scan.cosets[i].rep.size();
            break;
        }
    }
    out.malnormal = witnessLen < 0;
    out.stabilized = conjugatorRadius >= 2 &&
                     (out.malnormal || witnessLen <= conjugatorRadius - 2);
    return out;
}

} // namespace coarsekit
