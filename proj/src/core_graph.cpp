#include "coarsekit/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "coarsekit/detail/folder.hpp"
#include "coarsekit/errors.hpp"

namespace coarsekit {

namespace {

int degree_of(const std::vector<int>& table) {
    int d = 0;
    for (int t : table)
        if (t >= 0)
            ++d;
    return d;
}

} // namespace

/// Builds a CoreGraph out of a folded Folder: keep the basepoint component,
/// trim non-basepoint vertices of degree <= 1, renumber by a BFS that walks
/// letters in rank order. The numbering is canonical, so two isomorphic
/// based graphs serialize identically.
class GraphBuilder {
public:
    static CoreGraph extract(detail::Folder& f, int genCount, int basepoint) {
        f.settle();
        const int twoG = 2 * genCount;
        int base = f.find(basepoint);

        // Normalize transitions of live roots so they point at roots.
        std::set<int> alive;
        {
            std::deque<int> queue{base};
            alive.insert(base);
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int rk = 0; rk < twoG; ++rk) {
                    int w = f.step(u, rk);
                    if (w >= 0 && alive.insert(w).second)
                        queue.push_back(w);
                }
            }
        }
        for (int v : alive) {
            auto& table = f.trans[static_cast<std::size_t>(v)];
            for (int rk = 0; rk < twoG; ++rk)
                if (table[static_cast<std::size_t>(rk)] >= 0)
                    table[static_cast<std::size_t>(rk)] = f.find(table[static_cast<std::size_t>(rk)]);
        }

        // Trim hair; cleared transitions are removed pairwise.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : std::vector<int>(alive.begin(), alive.end())) {
                if (v == base || alive.find(v) == alive.end())
                    continue;
                auto& table = f.trans[static_cast<std::size_t>(v)];
                if (degree_of(table) <= 1) {
                    for (int rk = 0; rk < twoG; ++rk) {
                        int w = table[static_cast<std::size_t>(rk)];
                        if (w < 0)
                            continue;
                        int back = rk % 2 ? rk - 1 : rk + 1;
                        auto& wt = f.trans[static_cast<std::size_t>(w)];
                        if (wt[static_cast<std::size_t>(back)] == v)
                            wt[static_cast<std::size_t>(back)] = -1;
                        table[static_cast<std::size_t>(rk)] = -1;
                    }
                    alive.erase(v);
                    changed = true;
                }
            }
        }

        // Canonical BFS renumbering.
        std::vector<int> order{base};
        std::set<int> seen{base};
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto& table = f.trans[static_cast<std::size_t>(order[i])];
            for (int rk = 0; rk < twoG; ++rk) {
                int w = table[static_cast<std::size_t>(rk)];
                if (w >= 0 && alive.count(w) && seen.insert(w).second)
                    order.push_back(w);
            }
        }
        std::map<int, int> number;
        for (std::size_t i = 0; i < order.size(); ++i)
            number[order[i]] = static_cast<int>(i);

        CoreGraph g;
        g.genCount_ = genCount;
        g.trans_.assign(order.size() * static_cast<std::size_t>(twoG), -1);
        for (std::size_t i = 0; i < order.size(); ++i) {
            auto& table = f.trans[static_cast<std::size_t>(order[i])];
            for (int rk = 0; rk < twoG; ++rk) {
                int w = table[static_cast<std::size_t>(rk)];
                if (w >= 0 && alive.count(w))
                    g.trans_[i * static_cast<std::size_t>(twoG) + static_cast<std::size_t>(rk)] = number.at(w);
            }
        }
        return g;
    }

    /// Loads an existing core graph into a Folder so it can be extended.
    static detail::Folder to_folder(const CoreGraph& g) {
        const int twoG = 2 * g.generator_count();
        detail::Folder f(g.vertex_count(), twoG);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int rk = 0; rk < twoG; ++rk) {
                int w = g.trans_[static_cast<std::size_t>(v) * static_cast<std::size_t>(twoG) +
                                 static_cast<std::size_t>(rk)];
                if (w >= 0)
                    f.trans[static_cast<std::size_t>(v)][static_cast<std::size_t>(rk)] = w;
            }
        return f;
    }
};

int CoreGraph::edge_count() const {
    int entries = 0;
    for (int t : trans_)
        if (t >= 0)
            ++entries;
    return entries / 2;
}

bool CoreGraph::accepts(const Word& w) const {
    int v = 0;
    for (Letter l : w.letters()) {
        v = step(v, l);
        if (v < 0)
            return false;
    }
    return v == 0;
}

std::string CoreGraph::canonical_signature() const {
    std::string sig = std::to_string(genCount_) + ":";
    for (int t : trans_) {
        sig += std::to_string(t);
        sig += ',';
    }
    return sig;
}

CoreGraph CoreGraph::fold_words(int generatorCount, const std::vector<Word>& gens) {
    if (generatorCount < 1)
        throw DomainError("generator count must be positive");
    detail::Folder f(1, 2 * generatorCount);
    auto addEdge = [&](int u, Letter l, int v) {
        f.set_edge(u, letter_rank(l), v);
        f.set_edge(v, letter_rank(inverse_letter(l)), u);
        f.settle();
    };
    for (const Word& w : gens) {
        if (w.empty())
            continue;
        for (Letter l : w.letters())
            if (generator_of(l) >= generatorCount)
                throw DomainError("generator word uses an unknown generator");
        int cur = 0;
        for (int i = 0; i + 1 < w.size(); ++i) {
            int nv = f.add_vertex();
            addEdge(cur, w.at(i), nv);
            cur = nv;
        }
        addEdge(cur, w.back(), 0);
    }
    return GraphBuilder::extract(f, generatorCount, 0);
}

CoreGraph conjugate_subgroup(const CoreGraph& h, const Word& g) {
    if (g.empty())
        return h;
    detail::Folder f = GraphBuilder::to_folder(h);
    int s = f.add_vertex();
    int cur = s;
    for (int i = 0; i < g.size(); ++i) {
        int next = i + 1 == g.size() ? 0 : f.add_vertex();
        f.set_edge(cur, letter_rank(g.at(i)), next);
        f.set_edge(next, letter_rank(inverse_letter(g.at(i))), cur);
        f.settle();
        cur = next;
    }
    return GraphBuilder::extract(f, h.generator_count(), s);
}

CoreGraph intersect(const CoreGraph& a, const CoreGraph& b) {
    if (a.generator_count() != b.generator_count())
        throw DomainError("core graphs over different generator counts");
    const int twoG = 2 * a.generator_count();

    // Reachable product automaton from (0, 0); it is already deterministic,
    // extraction only trims it to the core.
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states{{0, 0}};
    id[{0, 0}] = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (int rk = 0; rk < twoG; ++rk) {
            Letter l = letter_from_rank(rk);
            int pa = a.step(states[i].first, l);
            int pb = b.step(states[i].second, l);
            if (pa < 0 || pb < 0)
                continue;
            auto key = std::make_pair(pa, pb);
            if (!id.count(key)) {
                id[key] = static_cast<int>(states.size());
                states.push_back(key);
            }
        }
    }
    detail::Folder f(static_cast<int>(states.size()), twoG);
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (int rk = 0; rk < twoG; ++rk) {
            Letter l = letter_from_rank(rk);
            int pa = a.step(states[i].first, l);
            int pb = b.step(states[i].second, l);
            if (pa < 0 || pb < 0)
                continue;
            f.trans[i][static_cast<std::size_t>(rk)] = id.at({pa, pb});
        }
    }
    return GraphBuilder::extract(f, a.generator_count(), 0);
}

Word coset_min_word(const CoreGraph& h, const Word& g) {
    detail::Folder f = GraphBuilder::to_folder(h);
    int s = 0;
    if (!g.empty()) {
        s = f.add_vertex();
        int cur = s;
        for (int i = 0; i < g.size(); ++i) {
            int next = i + 1 == g.size() ? 0 : f.add_vertex();
            f.set_edge(cur, letter_rank(g.at(i)), next);
            f.set_edge(next, letter_rank(inverse_letter(g.at(i))), cur);
            f.settle();
            cur = next;
        }
    }
    f.settle();
    const int twoG = 2 * h.generator_count();
    int start = f.find(s);
    int accept = f.find(0);
    if (start == accept)
        return Word();

    // BFS distances to the accept vertex (transitions are symmetric).
    std::map<int, int> dist;
    std::deque<int> queue{accept};
    dist[accept] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int rk = 0; rk < twoG; ++rk) {
            int w = f.step(u, rk);
            if (w >= 0 && !dist.count(w)) {
                dist[w] = dist.at(u) + 1;
                queue.push_back(w);
            }
        }
    }
    if (!dist.count(start))
        throw DomainError("coset graph is disconnected");

    // Layered lexicographic walk: at each step take the least letter that
    // still allows a geodesic continuation. Shortest paths cannot backtrack,
    // so the spelled word is freely reduced.
    int remaining = dist.at(start);
    std::set<int> frontier{start};
    std::vector<Letter> out;
    while (remaining > 0) {
        for (int rk = 0; rk < twoG; ++rk) {
            std::set<int> next;
            for (int v : frontier) {
                int w = f.step(v, rk);
                if (w >= 0) {
                    auto it = dist.find(w);
                    if (it != dist.end() && it->second == remaining - 1)
                        next.insert(w);
                }
            }
            if (!next.empty()) {
                out.push_back(letter_from_rank(rk));
                frontier = std::move(next);
                break;
            }
        }
        --remaining;
    }
    return Word(std::move(out));
}

} // namespace coarsekit
