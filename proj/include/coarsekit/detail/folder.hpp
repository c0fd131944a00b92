#pragma once

#include <utility>
#include <vector>

namespace coarsekit::detail {

// Union-find over vertices with per-class transition tables indexed by letter
// rank. Folding merges the targets of equally labeled edges until the
// quotient is deterministic.
struct Folder {
    int twoG;
    std::vector<int> uf;
    std::vector<int> rankUf;
    std::vector<std::vector<int>> trans;   // per root: twoG slots, -1 empty
    std::vector<std::pair<int, int>> pending;

    Folder(int n, int twoG_) : twoG(twoG_), uf(static_cast<std::size_t>(n)), rankUf(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i)
            uf[static_cast<std::size_t>(i)] = i;
        trans.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(twoG), -1));
    }

    int add_vertex() {
        int v = static_cast<int>(uf.size());
        uf.push_back(v);
        rankUf.push_back(0);
        trans.emplace_back(static_cast<std::size_t>(twoG), -1);
        return v;
    }

    int find(int v) {
        while (uf[static_cast<std::size_t>(v)] != v) {
            uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
            v = uf[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void set_edge(int u, int rk, int v) {
        u = find(u);
        int& slot = trans[static_cast<std::size_t>(u)][static_cast<std::size_t>(rk)];
        if (slot < 0) {
            slot = v;
        } else if (find(slot) != find(v)) {
            pending.emplace_back(slot, v);
        }
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (rankUf[static_cast<std::size_t>(a)] < rankUf[static_cast<std::size_t>(b)])
            std::swap(a, b);
        if (rankUf[static_cast<std::size_t>(a)] == rankUf[static_cast<std::size_t>(b)])
            ++rankUf[static_cast<std::size_t>(a)];
        uf[static_cast<std::size_t>(b)] = a;
        std::vector<int> moved = std::move(trans[static_cast<std::size_t>(b)]);
        trans[static_cast<std::size_t>(b)].clear();
        for (int rk = 0; rk < twoG && rk < static_cast<int>(moved.size()); ++rk) {
            int t = moved[static_cast<std::size_t>(rk)];
            if (t >= 0)
                set_edge(a, rk, t);
        }
    }

    void settle() {
        while (!pending.empty()) {
            auto [a, b] = pending.back();
            pending.pop_back();
            merge(a, b);
        }
    }

    int step(int v, int rk) {
        int t = trans[static_cast<std::size_t>(find(v))][static_cast<std::size_t>(rk)];
        return t < 0 ? -1 : find(t);
    }
};

} // namespace coarsekit::detail
