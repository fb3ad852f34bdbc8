#include "altan/patch.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "altan/exact_linalg.hpp"

namespace altan {

namespace {

// Rule A: from directed edge (u,v) continue to (v, w) where w follows u in
// the CCW rotation at v. Bounded faces come out CCW, the outer face CW.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rot) {
    const int n = g.n;
    std::vector<int> base(n + 1, 0);
    for (int v = 0; v < n; ++v) base[v + 1] = base[v] + static_cast<int>(rot[v].size());
    auto pos_in_rot = [&](int v, int u) {
        const auto& r = rot[v];
        for (int k = 0; k < static_cast<int>(r.size()); ++k)
            if (r[k] == u) return k;
        throw InconsistentEmbedding("rotation at vertex " + std::to_string(v) +
                                    " does not list neighbour " + std::to_string(u));
    };

    std::vector<char> used(base[n], 0);
    std::vector<std::vector<int>> faces;
    for (int u0 = 0; u0 < n; ++u0) {
        for (int k0 = 0; k0 < static_cast<int>(rot[u0].size()); ++k0) {
            if (used[base[u0] + k0]) continue;
            std::vector<int> face;
            int u = u0, k = k0;
            do {
                used[base[u] + k] = 1;
                face.push_back(u);
                int v = rot[u][k];
                k = (pos_in_rot(v, u) + 1) % static_cast<int>(rot[v].size());
                u = v;
            } while (!(u == u0 && k == k0));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool face_is_simple(const std::vector<int>& face) {
    std::set<int> s(face.begin(), face.end());
    return s.size() == face.size();
}

} // namespace

PlanarPatch make_patch(Graph g, std::vector<std::vector<int>> rotation,
                       std::optional<int> outer_override) {
    const int n = g.n;
    if (n < 3) throw NotAPatch("make_patch: patches need at least 3 vertices");
    if (static_cast<int>(rotation.size()) != n)
        throw InconsistentEmbedding("make_patch: rotation list size does not match graph");
    for (int v = 0; v < n; ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.adjacency[v])
            throw InconsistentEmbedding("make_patch: rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbours");
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2 || g.degree(v) > 3)
            throw NotAPatch("make_patch: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)));
    if (!is_connected(g)) throw NotAPatch("make_patch: graph is not connected");

    PlanarPatch p;
    p.faces = trace_faces(g, rotation);
    const long long m = g.edge_count();
    if (static_cast<long long>(p.faces.size()) != m - n + 2)
        throw InconsistentEmbedding("make_patch: rotation system is not spherical (F=" +
                                    std::to_string(p.faces.size()) + ", expected " +
                                    std::to_string(m - n + 2) + ")");
    for (const auto& f : p.faces)
        if (!face_is_simple(f))
            throw NotAPatch("make_patch: a face walk repeats a vertex; graph is not 2-connected");

    std::vector<int> deg2;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) deg2.push_back(v);

    if (outer_override) {
        if (*outer_override < 0 || *outer_override >= static_cast<int>(p.faces.size()))
            throw IndexOutOfRange("make_patch: outer face index out of range");
        p.outer = *outer_override;
        std::set<int> outer_set(p.faces[p.outer].begin(), p.faces[p.outer].end());
        for (int v : deg2)
            if (!outer_set.count(v))
                throw NotAPatch("make_patch: degree-2 vertex " + std::to_string(v) +
                                " not on the chosen outer face");
    } else {
        int found = -1, count = 0;
        for (int i = 0; i < static_cast<int>(p.faces.size()); ++i) {
            std::set<int> fs(p.faces[i].begin(), p.faces[i].end());
            bool all = true;
            for (int v : deg2)
                if (!fs.count(v)) {
                    all = false;
                    break;
                }
            if (all) {
                ++count;
                if (found < 0) found = i;
            }
        }
        if (deg2.empty() || count > 1)
            throw AmbiguousOuterFace("make_patch: " + std::to_string(count) +
                                     " candidate outer faces");
        if (count == 0)
            throw NotAPatch("make_patch: no face contains every degree-2 vertex");
        p.outer = found;
    }

    p.graph = std::move(g);
    p.rotation = std::move(rotation);
    return p;
}

std::vector<int> perimeter_walk(const PlanarPatch& p) {
    const auto& outer = p.faces[p.outer];
    std::vector<int> walk;
    walk.reserve(outer.size());
    walk.push_back(outer[0]);
    for (size_t i = outer.size(); i > 1; --i) walk.push_back(outer[i - 1]);
    return walk;
}

AttachmentSet natural_attachment_set(const PlanarPatch& p) {
    AttachmentSet H;
    for (int v : perimeter_walk(p))
        if (p.graph.degree(v) == 2) H.vertices.push_back(v);
    if (H.h() < 2)
        throw NoDegreeTwoVertices("natural_attachment_set: found " + std::to_string(H.h()) +
                                  " degree-2 vertices, need at least 2");
    return canonical_rotation(H);
}

PlanarPatch altan_of_patch(const PlanarPatch& p) {
    const int n = p.graph.n;
    std::vector<int> walk = perimeter_walk(p);
    const int plen = static_cast<int>(walk.size());

    AttachmentSet H = natural_attachment_set(p);
    const int h = H.h();

    AltanPair pair = make_altan_pair(p.graph, H);
    AltanPair ap = altan(pair);

    // perimeter predecessor/successor of each attachment vertex
    std::vector<int> prev(n, -1), next(n, -1);
    for (int i = 0; i < plen; ++i) {
        int v = walk[i];
        prev[v] = walk[(i - 1 + plen) % plen];
        next[v] = walk[(i + 1) % plen];
    }

    std::vector<std::vector<int>> rot(ap.graph.n);
    for (int v = 0; v < n; ++v) rot[v] = p.rotation[v];
    for (int i = 0; i < h; ++i) {
        int v = pair.attachment.vertices[i];
        int xi = n + i;
        int yi = n + h + i;
        int yprev = n + h + (i - 1 + h) % h;
        int xnext = n + (i + 1) % h;
        // Orientation is pinned by the retained rotations at degree-3 perimeter
        // vertices: each new face is traced v_{i+1} .. v_i, x_i, y_i, x_{i+1}.
        rot[v] = {next[v], xi, prev[v]};
        rot[xi] = {v, yi, yprev};
        rot[yi] = {xi, xnext};
    }

    PlanarPatch out = make_patch(ap.graph, std::move(rot));
    if (static_cast<int>(out.faces[out.outer].size()) != 2 * h)
        throw IdentityViolation("altan_of_patch: outer face is not the new 2h-ring");
    for (int v : out.faces[out.outer])
        if (v < n)
            throw IdentityViolation("altan_of_patch: outer face touches a parent vertex");
    return out;
}

FaceCensus face_census(const PlanarPatch& parent, const PlanarPatch& alt) {
    FaceCensus c;
    std::map<int, long long> parent_f;
    for (int i = 0; i < static_cast<int>(parent.faces.size()); ++i)
        if (i != parent.outer) ++parent_f[static_cast<int>(parent.faces[i].size())];
    for (int i = 0; i < static_cast<int>(alt.faces.size()); ++i)
        if (i != alt.outer) ++c.f[static_cast<int>(alt.faces[i].size())];

    c.f_tilde = c.f;
    for (auto [r, cnt] : parent_f) {
        c.f_tilde[r] -= cnt;
        if (c.f_tilde[r] < 0)
            throw IdentityViolation("face_census: altan has fewer " + std::to_string(r) +
                                    "-gons than its parent");
        if (c.f_tilde[r] == 0) c.f_tilde.erase(r);
    }

    for (int v : perimeter_walk(parent)) {
        if (parent.graph.degree(v) == 2)
            ++c.n2;
        else
            ++c.n3b;
    }
    c.parent_all_hexagons = true;
    for (auto [r, cnt] : parent_f)
        if (r != 6) c.parent_all_hexagons = false;
    c.parent_bipartite = is_bipartite(parent.graph);

    long long euler = 0;
    for (auto [r, cnt] : c.f) euler += static_cast<long long>(6 - r) * cnt;
    if (euler != 6)
        throw IdentityViolation("face_census: sum (6-r) f_r = " + std::to_string(euler) +
                                ", expected 6");

    if (c.f_tilde.count(3) || c.f_tilde.count(4))
        throw IdentityViolation("face_census: altanisation created a triangle or quadrilateral");

    long long strip = 0;
    int max_new = 0;
    for (auto [r, cnt] : c.f_tilde) {
        strip += static_cast<long long>(6 - r) * cnt;
        max_new = std::max(max_new, r);
    }
    if (strip != c.n2 - c.n3b)
        throw IdentityViolation("face_census: sum (6-r) f~_r = " + std::to_string(strip) +
                                ", expected n2 - n3b = " + std::to_string(c.n2 - c.n3b));

    auto tilde = [&](int r) {
        auto it = c.f_tilde.find(r);
        return it == c.f_tilde.end() ? 0ll : it->second;
    };
    if (c.parent_all_hexagons && max_new <= 9) {
        long long lhs = tilde(5) - tilde(7) - 2 * tilde(8) - 3 * tilde(9);
        if (lhs != 6)
            throw IdentityViolation("face_census: benzenoid strip identity gave " +
                                    std::to_string(lhs) + ", expected 6");
    }
    if (c.parent_bipartite) {
        long long odd = 0;
        for (auto [r, cnt] : c.f_tilde)
            if (r % 2 == 1) odd += cnt;
        if (odd % 2 != 0)
            throw IdentityViolation("face_census: odd new-face count must be even for a bipartite parent");
    }
    return c;
}

BoundaryProfile bay_features(const BoundaryProfile& profile) {
    BoundaryProfile out;
    out.code = profile.code;
    const int p = static_cast<int>(out.code.size());
    if (p == 0) return out;
    bool any2 = false;
    for (int d : out.code)
        if (d == 2) any2 = true;
    if (!any2) { // cyclic all-3 word
        out.b = p;
        return out;
    }
    for (int i = 0; i < p; ++i) {
        if (out.code[i] == 2 && out.code[(i + 1) % p] == 2) ++out.n22;
        if (out.code[i] == 3 && out.code[(i - 1 + p) % p] == 2) {
            int len = 0;
            while (out.code[(i + len) % p] == 3) ++len;
            if (len == 1) ++out.b1;
            else if (len == 2) ++out.b2;
            else if (len == 3) ++out.b3;
            else if (len == 4) ++out.b4;
            out.b += len - 1;
        }
    }
    return out;
}

BoundaryProfile boundary_profile(const PlanarPatch& p) {
    BoundaryProfile prof;
    for (int v : perimeter_walk(p)) prof.code.push_back(p.graph.degree(v));
    return bay_features(prof);
}

bool parity_check(const PlanarPatch& p) {
    if (!is_bipartite(p.graph)) throw NotBipartite("parity_check: patch is not bipartite");
    BoundaryProfile prof = boundary_profile(p);
    const int n2 = static_cast<int>(std::count(prof.code.begin(), prof.code.end(), 2));
    const int n3b = static_cast<int>(prof.code.size()) - n2;
    int n3 = 0;
    for (int v = 0; v < p.graph.n; ++v)
        if (p.graph.degree(v) == 3) ++n3;
    const int n3i = n3 - n3b;
    const int n = p.graph.n;
    const int eta = nullity(p.graph);
    const int h = natural_attachment_set(p).h();

    if (h != n2) return false;
    if (static_cast<int>(prof.code.size()) % 2 != 0) return false;
    if (n3 % 2 != 0) return false;
    const int par = n2 % 2;
    return n3i % 2 == par && n3b % 2 == par && n % 2 == par && eta % 2 == par;
}

long long count_perfect_matchings(const Graph& g) {
    const int n = g.n;
    if (n == 0) return 1;
    if (n % 2 != 0) return 0;
    if (n > 64) throw CapExceeded("count_perfect_matchings: more than 64 vertices");

    std::vector<uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.adjacency[u]) adj[u] |= uint64_t(1) << v;

    std::unordered_map<uint64_t, long long> memo;
    auto rec = [&](auto&& self, uint64_t mask) -> long long {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int best = -1, best_deg = 65;
        for (uint64_t rest = mask; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            int d = __builtin_popcountll(adj[v] & mask);
            if (d < best_deg) {
                best_deg = d;
                best = v;
                if (d <= 1) break;
            }
        }
        long long total = 0;
        if (best_deg > 0) {
            uint64_t nbrs = adj[best] & mask;
            uint64_t without_v = mask & ~(uint64_t(1) << best);
            while (nbrs) {
                int u = __builtin_ctzll(nbrs);
                nbrs &= nbrs - 1;
                long long sub = self(self, without_v & ~(uint64_t(1) << u));
                if (__builtin_add_overflow(total, sub, &total))
                    throw CapExceeded("count_perfect_matchings: count overflow");
            }
        }
        memo.emplace(mask, total);
        return total;
    };
    uint64_t full = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    return rec(rec, full);
}

} // namespace altan
