#include "patch_growth.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace altan::growth {

GrowthPatch seed(int r) {
    if (r < 3) throw Error("seed: faces need at least 3 sides");
    GrowthPatch p;
    p.n = r;
    p.rot.resize(r);
    for (int i = 0; i < r; ++i) p.rot[i] = {(i + 1) % r, (i - 1 + r) % r};
    p.boundary.resize(r);
    for (int i = 0; i < r; ++i) p.boundary[i] = i;
    p.face_sizes = {r};
    return p;
}

std::optional<GrowthPatch> grow(const GrowthPatch& p, int pos, int j, int r) {
    const int L = static_cast<int>(p.boundary.size());
    if (j < 1 || j > r - 1 || j > L - 1) return std::nullopt;

    auto at = [&](int i) { return p.boundary[((i % L) + L) % L]; };
    const int a = at(pos), b = at(pos + j);
    if (p.degree(a) != 2 || p.degree(b) != 2) return std::nullopt;
    for (int i = 1; i < j; ++i)
        if (p.degree(at(pos + i)) != 3) return std::nullopt;

    const int k = r - j - 1; // new chain vertices
    if (k == 0) {
        // single closing edge; reject doubled edges
        for (int w : p.rot[a])
            if (w == b) return std::nullopt;
    }

    GrowthPatch q = p;
    q.n = p.n + k;
    q.rot.resize(q.n);
    const int prev_a = at(pos - 1), next_a = at(pos + 1);
    const int prev_b = at(pos + j - 1), next_b = at(pos + j + 1);

    std::vector<int> chain(k); // q_1 .. q_k walks b -> a
    for (int i = 0; i < k; ++i) chain[i] = p.n + i;

    const int a_new = k ? chain[k - 1] : b;
    const int b_new = k ? chain[0] : a;
    q.rot[a] = {next_a, prev_a, a_new};
    q.rot[b] = {next_b, prev_b, b_new};
    for (int i = 0; i < k; ++i) {
        int before = (i == 0) ? b : chain[i - 1];
        int after = (i == k - 1) ? a : chain[i + 1];
        q.rot[chain[i]] = {before, after};
    }

    std::vector<int> nb;
    nb.reserve(L - j + 1 + k);
    nb.push_back(a);
    for (int i = k - 1; i >= 0; --i) nb.push_back(chain[i]);
    nb.push_back(b);
    for (int i = j + 1; i < L; ++i) nb.push_back(at(pos + i));
    q.boundary = std::move(nb);
    q.face_sizes.push_back(r);
    return q;
}

namespace {

std::vector<int> bfs_code(const GrowthPatch& p, int u0, int v0, bool reversed) {
    std::vector<int> label(p.n, 0), parent(p.n, -1), order;
    order.reserve(p.n);
    label[u0] = 1;
    parent[u0] = v0;
    order.push_back(u0);
    int next = 2;
    std::vector<int> out;
    out.reserve(3 * p.n);
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int w = order[idx];
        const auto& rot = p.rot[w];
        const int d = static_cast<int>(rot.size());
        int start = 0;
        while (rot[start] != parent[w]) ++start;
        for (int s = 0; s < d; ++s) {
            int x = reversed ? rot[((start - s) % d + d) % d] : rot[(start + s) % d];
            if (label[x] == 0) {
                label[x] = next++;
                parent[x] = w;
                order.push_back(x);
            }
            out.push_back(label[x]);
        }
        out.push_back(0);
    }
    return out;
}

} // namespace

std::vector<int> canonical_code(const GrowthPatch& p) {
    const int L = static_cast<int>(p.boundary.size());
    std::vector<int> best;
    for (int t = 0; t < L; ++t) {
        int u = p.boundary[t], v = p.boundary[(t + 1) % L];
        std::vector<int> fwd = bfs_code(p, u, v, false);
        if (best.empty() || fwd < best) best = std::move(fwd);
        std::vector<int> rev = bfs_code(p, v, u, true);
        if (rev < best) best = std::move(rev);
    }
    return best;
}

PlanarPatch to_planar_patch(const GrowthPatch& p) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < p.n; ++v)
        for (int w : p.rot[v])
            if (v < w) edges.emplace_back(v, w);
    Graph g = make_graph(p.n, edges);
    try {
        return make_patch(g, p.rot);
    } catch (const AmbiguousOuterFace&) {
        // pick the traced face matching the stored boundary cycle
        PlanarPatch probe = make_patch(g, p.rot, 0);
        const std::vector<int>& target = p.boundary;
        for (int i = 0; i < static_cast<int>(probe.faces.size()); ++i) {
            const auto& f = probe.faces[i];
            if (f.size() != target.size()) continue;
            for (size_t s = 0; s < f.size(); ++s) {
                bool ok = true;
                for (size_t t = 0; t < f.size(); ++t)
                    if (f[(s + t) % f.size()] != target[t]) {
                        ok = false;
                        break;
                    }
                if (ok) return make_patch(g, p.rot, i);
            }
        }
        throw;
    }
}

void enumerate_patches(const std::vector<int>& allowed, int max_faces,
                       const std::function<void(const GrowthPatch&)>& visit) {
    if (max_faces < 1) return;
    std::map<std::vector<int>, GrowthPatch> level;
    for (int r : allowed) {
        GrowthPatch s = seed(r);
        level.emplace(canonical_code(s), std::move(s));
    }
    for (auto& [code, s] : level) visit(s);

    for (int f = 2; f <= max_faces; ++f) {
        std::map<std::vector<int>, GrowthPatch> next;
        for (const auto& [code, state] : level) {
            const int L = static_cast<int>(state.boundary.size());
            for (int r : allowed) {
                for (int pos = 0; pos < L; ++pos) {
                    for (int j = 1; j <= std::min(r - 1, L - 1); ++j) {
                        auto child = grow(state, pos, j, r);
                        if (!child) continue;
                        auto ccode = canonical_code(*child);
                        next.emplace(std::move(ccode), std::move(*child));
                    }
                }
            }
        }
        for (auto& [ccode, s] : next) visit(s);
        level = std::move(next);
    }
}

} // namespace altan::growth
