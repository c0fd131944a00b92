#include "coarsekit/ccomplex.hpp"

#include <algorithm>
#include <set>

namespace coarsekit {

namespace {

std::vector<std::vector<int>> canonical_sort(std::set<std::vector<int>> simplices) {
    std::vector<std::vector<int>> out(simplices.begin(), simplices.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace

bool CComplex::has_simplex(const std::vector<int>& s) const {
    for (const auto& t : simplices)
        if (t == s)
            return true;
    return false;
}

std::vector<std::vector<int>> CComplex::maximal_simplices() const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices) {
        bool maximal = true;
        for (const auto& t : simplices)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

CComplex build_exact(const CoreGraph& h, const std::vector<CosetId>& window) {
    CComplex out;
    out.provenance = "exact";
    out.vertices = window;
    const int n = static_cast<int>(window.size());

    std::vector<CoreGraph> conjugates;
    conjugates.reserve(window.size());
    for (const auto& c : window)
        conjugates.push_back(conjugate_subgroup(h, c.rep));

    // Every window coset is a vertex; the infinite-intersection condition
    // starts at pairs.
    std::set<std::vector<int>> simplices;
    struct Tuple {
        std::vector<int> members;
        CoreGraph meet;
    };
    std::vector<Tuple> level;
    for (int i = 0; i < n; ++i) {
        level.push_back(Tuple{{i}, conjugates[static_cast<std::size_t>(i)]});
        simplices.insert({i});
    }
    while (!level.empty()) {
        std::vector<Tuple> next;
        for (const Tuple& t : level) {
            for (int j = t.members.back() + 1; j < n; ++j) {
                CoreGraph meet = intersect(t.meet, conjugates[static_cast<std::size_t>(j)]);
                if (!meet.infinite())
                    continue;
                Tuple nt;
                nt.members = t.members;
                nt.members.push_back(j);
                nt.meet = std::move(meet);
                simplices.insert(nt.members);
                next.push_back(std::move(nt));
            }
        }
        level = std::move(next);
    }
    out.simplices = canonical_sort(std::move(simplices));
    return out;
}

CComplex build_exact_radius(const CoreGraph& h, int conjugatorRadius) {
    Presentation free = Presentation::free_group(h.generator_count());
    CayleyBall ball = generate_ball(free, conjugatorRadius);
    SubgroupPredicate pred = SubgroupPredicate::from_core(h);
    return build_exact(h, enumerate_cosets(pred, ball).cosets);
}

CComplex build_coarse(const PatternSpace& p, int diameterThreshold, int k) {
    CComplex out;
    out.provenance = "coarse";
    const int n = static_cast<int>(p.family.size());
    for (const auto& fam : p.family)
        out.vertices.push_back(CosetId{fam.cosetRep});

    // k-neighborhood bitmasks per family member.
    const int V = p.space->size();
    const std::size_t wordsPerMask = static_cast<std::size_t>(V + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& field = p.dist_to_member(i);
        auto& mask = masks[static_cast<std::size_t>(i)];
        mask.assign(wordsPerMask, 0);
        for (int v = 0; v < V; ++v)
            if (field[static_cast<std::size_t>(v)] >= 0 && field[static_cast<std::size_t>(v)] <= k)
                mask[static_cast<std::size_t>(v) / 64] |= 1ULL << (static_cast<std::size_t>(v) % 64);
    }

    auto diameter_of_mask = [&](const std::vector<std::uint64_t>& mask) {
        std::vector<int> verts;
        for (int v = 0; v < V; ++v)
            if (mask[static_cast<std::size_t>(v) / 64] >> (static_cast<std::size_t>(v) % 64) & 1)
                verts.push_back(v);
        if (verts.empty())
            return -1;
        int diam = 0;
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                diam = std::max(diam, p.space->distance(verts[a], verts[b]));
        return diam;
    };

    // Vertices are unconditional here too; the diameter test starts at pairs.
    std::set<std::vector<int>> simplices;
    struct Tuple {
        std::vector<int> members;
        std::vector<std::uint64_t> meet;
    };
    std::vector<Tuple> level;
    for (int i = 0; i < n; ++i) {
        level.push_back(Tuple{{i}, masks[static_cast<std::size_t>(i)]});
        simplices.insert({i});
    }
    while (!level.empty()) {
        std::vector<Tuple> next;
        for (const Tuple& t : level) {
            for (int j = t.members.back() + 1; j < n; ++j) {
                std::vector<std::uint64_t> meet(wordsPerMask);
                bool nonempty = false;
                for (std::size_t w = 0; w < wordsPerMask; ++w) {
                    meet[w] = t.meet[w] & masks[static_cast<std::size_t>(j)][w];
                    nonempty |= meet[w] != 0;
                }
                if (!nonempty || diameter_of_mask(meet) < diameterThreshold)
                    continue;
                Tuple nt;
                nt.members = t.members;
                nt.members.push_back(j);
                nt.meet = std::move(meet);
                simplices.insert(nt.members);
                next.push_back(std::move(nt));
            }
        }
        level = std::move(next);
    }
    out.simplices = canonical_sort(std::move(simplices));
    return out;
}

CComplexStats stats(const CComplex& c) {
    CComplexStats st;
    std::set<std::pair<int, int>> edges;
    for (const auto& s : c.simplices) {
        st.maxCellDimension = std::max(st.maxCellDimension, static_cast<int>(s.size()) - 1);
        if (!s.empty())
            st.maxCliqueSize = std::max(st.maxCliqueSize, 1);
        if (s.size() == 2)
            edges.emplace(s[0], s[1]);
    }
    if (c.simplices.empty())
        return st;   // (0, 0) by convention

    // Max clique in the 1-skeleton (can exceed the top simplex size).
    std::vector<int> verts;
    for (const auto& s : c.simplices)
        if (s.size() == 1)
            verts.push_back(s[0]);
    auto adjacent = [&](int a, int b) {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::vector<int> best;
    std::vector<int> current;
    auto search = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (current.size() > best.size())
            best = current;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + candidates.size() - i <= best.size())
                return;
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (adjacent(candidates[i], candidates[j]))
                    next.push_back(candidates[j]);
            current.push_back(candidates[i]);
            self(self, next);
            current.pop_back();
        }
    };
    search(search, verts);
    st.maxCliqueSize = std::max(st.maxCliqueSize, static_cast<int>(best.size()));
    return st;
}

IsoResult isomorphic_under(const std::vector<int>& phi, const CComplex& c1, const CComplex& c2) {
    IsoResult out;
    if (phi.size() != c1.vertices.size() || c1.vertices.size() != c2.vertices.size())
        throw DomainError("pairing is not a bijection between the vertex sets");
    std::vector<char> hit(phi.size(), 0);
    for (int im : phi) {
        if (im < 0 || im >= static_cast<int>(phi.size()) || hit[static_cast<std::size_t>(im)])
            throw DomainError("pairing is not a bijection between the vertex sets");
        hit[static_cast<std::size_t>(im)] = 1;
    }

    std::set<std::vector<int>> s2(c2.simplices.begin(), c2.simplices.end());
    for (const auto& s : c1.simplices) {
        std::vector<int> image;
        image.reserve(s.size());
        for (int v : s)
            image.push_back(phi[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (!s2.count(image)) {
            out.violation = s;
            return out;
        }
    }
    // A vertex bijection is injective on simplices, so matching counts per
    // dimension make the map onto; find a witness otherwise.
    if (c1.simplices.size() != c2.simplices.size()) {
        std::vector<int> inverse(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i)
            inverse[static_cast<std::size_t>(phi[i])] = static_cast<int>(i);
        std::set<std::vector<int>> s1(c1.simplices.begin(), c1.simplices.end());
        for (const auto& s : c2.simplices) {
            std::vector<int> pre;
            pre.reserve(s.size());
            for (int v : s)
                pre.push_back(inverse[static_cast<std::size_t>(v)]);
            std::sort(pre.begin(), pre.end());
            if (!s1.count(pre)) {
                out.violation = s;
                return out;
            }
        }
    }
    out.isomorphic = true;
    return out;
}

std::string to_dot(const CComplex& c, const Presentation& pres) {
    std::string dot = "graph ccomplex {\n";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        dot += "  v" + std::to_string(i) + " [label=\"" + format_word(pres, c.vertices[i].rep) + "\"];\n";
    for (const auto& s : c.simplices)
        if (s.size() == 2)
            dot += "  v" + std::to_string(s[0]) + " -- v" + std::to_string(s[1]) + ";\n";
    dot += "}\n";
    return dot;
}

} // namespace coarsekit
