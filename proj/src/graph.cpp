#include "altan/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace altan {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& a : adjacency) twice += static_cast<long long>(a.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw IndexOutOfRange("make_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRange("make_graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" + std::to_string(n));
        if (u == v) throw SelfLoop("make_graph: self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

Graph prefix_subgraph(const Graph& g, int k) {
    if (k < 0 || k > g.n) throw IndexOutOfRange("prefix_subgraph: bad prefix size");
    Graph h;
    h.n = k;
    h.adjacency.assign(k, {});
    for (int u = 0; u < k; ++u)
        for (int v : g.adjacency[u])
            if (v < k) h.adjacency[u].push_back(v);
    return h;
}

AttachmentSet canonical_rotation(const AttachmentSet& H) {
    const auto& v = H.vertices;
    int h = static_cast<int>(v.size());
    if (h == 0) return H;
    int best = 0;
    for (int s = 1; s < h; ++s) {
        for (int i = 0; i < h; ++i) {
            int a = v[(s + i) % h], b = v[(best + i) % h];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    AttachmentSet out;
    out.vertices.reserve(h);
    for (int i = 0; i < h; ++i) out.vertices.push_back(v[(best + i) % h]);
    return out;
}

AltanPair make_altan_pair(Graph g, AttachmentSet H) {
    if (H.h() < 2)
        throw InvalidAttachment("make_altan_pair: attachment needs at least two entries, got " +
                                std::to_string(H.h()));
    for (int v : H.vertices)
        if (v < 0 || v >= g.n)
            throw InvalidAttachment("make_altan_pair: attachment vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(g.n));
    AltanPair p;
    p.graph = std::move(g);
    p.attachment = canonical_rotation(H);
    return p;
}

AltanPair altan(const AltanPair& pair) {
    const int n = pair.graph.n;
    const int h = pair.attachment.h();
    if (h < 2) throw InvalidAttachment("altan: attachment needs at least two entries");

    auto edges = pair.graph.edges();
    edges.reserve(edges.size() + 3 * static_cast<size_t>(h));
    for (int i = 0; i < h; ++i) {
        int xi = n + i;
        int yi = n + h + i;
        edges.emplace_back(pair.attachment.vertices[i], xi); // spoke into the parent
        edges.emplace_back(xi, yi);
        edges.emplace_back(yi, n + (i + 1) % h); // ring edge y_i x_{i+1}
    }

    AltanPair out;
    out.graph = make_graph(n + 2 * h, edges);
    out.attachment.vertices.resize(h);
    for (int i = 0; i < h; ++i) out.attachment.vertices[i] = n + h + i;
    out.level = pair.level + 1;
    out.x_range = {n, n + h};
    out.y_range = {n + h, n + 2 * h};
    return out;
}

AltanPair iterated_altan(const AltanPair& pair, int k) {
    if (k < 0) throw Error("iterated_altan: negative iteration count");
    AltanPair cur = pair;
    for (int i = 0; i < k; ++i) cur = altan(cur);
    return cur;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adjacency[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == g.n;
}

bool is_bipartite(const Graph& g, std::vector<int>* colour) {
    std::vector<int> col(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adjacency[u]) {
                if (col[v] < 0) {
                    col[v] = col[u] ^ 1;
                    q.push(v);
                } else if (col[v] == col[u]) {
                    return false;
                }
            }
        }
    }
    if (colour) *colour = std::move(col);
    return true;
}

std::string to_json(const GraphDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.graph.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : doc.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (doc.attachment) j["attachment"] = doc.attachment->vertices;
    j["level"] = doc.level;
    return j.dump(2);
}

GraphDocument graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("graph_from_json: parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error("graph_from_json: expected object with \"n\" and \"edges\"");
    GraphDocument doc;
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error("graph_from_json: each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        doc.graph = make_graph(n, edges);
        if (j.contains("attachment") && !j.at("attachment").is_null()) {
            AttachmentSet H;
            for (const auto& v : j.at("attachment")) H.vertices.push_back(v.get<int>());
            doc.attachment = H;
        }
        if (j.contains("level")) doc.level = j.at("level").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("graph_from_json: bad field: ") + e.what());
    }
    return doc;
}

std::string to_dot(const Graph& g, const std::vector<std::string>* labels) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n; ++v) {
        os << "  " << v;
        if (labels && v < static_cast<int>(labels->size())) os << " [label=\"" << (*labels)[v] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace altan
