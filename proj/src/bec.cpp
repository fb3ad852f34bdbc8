#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "altan/patch.hpp"
#include "altan/polyhex.hpp"

namespace altan {

namespace {

std::string canonical_code_string(std::string digits) {
    const size_t k = digits.size();
    std::string best;
    for (int refl = 0; refl < 2; ++refl) {
        std::string base = digits;
        if (refl) std::reverse(base.begin(), base.end());
        for (size_t s = 0; s < k; ++s) {
            std::string cand = base.substr(s) + base.substr(0, s);
            if (best.empty() || cand > best) best = std::move(cand);
        }
    }
    return best;
}

} // namespace

std::string boundary_edge_code(const PlanarPatch& p) {
    std::vector<int> walk = perimeter_walk(p);
    const int plen = static_cast<int>(walk.size());
    std::vector<int> pos3;
    for (int i = 0; i < plen; ++i)
        if (p.graph.degree(walk[i]) == 3) pos3.push_back(i);

    std::string digits;
    if (pos3.empty()) {
        if (plen > 9)
            throw InvalidCode("boundary_edge_code: all-degree-2 perimeter of length " +
                              std::to_string(plen) + " has no single-digit code");
        digits = std::string(1, static_cast<char>('0' + plen));
        return digits;
    }
    const int k = static_cast<int>(pos3.size());
    for (int i = 0; i < k; ++i) {
        int d = (k == 1) ? plen : (pos3[(i + 1) % k] - pos3[i] + plen) % plen;
        if (d < 1 || d > 9)
            throw InvalidCode("boundary_edge_code: run of " + std::to_string(d) +
                              " edges has no digit");
        digits.push_back(static_cast<char>('0' + d));
    }
    return canonical_code_string(std::move(digits));
}

PlanarPatch parse_bec(const std::string& code) {
    if (code.empty()) throw InvalidCode("parse_bec: empty code");
    for (char ch : code)
        if (ch < '1' || ch > '9') throw InvalidCode("parse_bec: invalid character in code");

    if (code == "6") return to_patch(Polyhex{{Cell{0, 0}}});
    if (code.size() == 1) throw InvalidCode("parse_bec: single-digit code must be \"6\"");

    // cyclic degree word: digit d contributes d-1 twos and one three
    std::vector<int> word;
    for (char ch : code) {
        for (int i = 0; i < ch - '1'; ++i) word.push_back(2);
        word.push_back(3);
    }

    // boundary walk over lattice cells with the region on the left; the
    // state is (cell, side), a side spanning corners s and s+1
    struct State {
        Cell c;
        int s;
        auto operator<=>(const State&) const = default;
    };
    auto wall_key = [](Cell c, int s) {
        Cell other = c + kHexDir[s];
        int os = (s + 3) % 6;
        std::pair<std::pair<int, int>, int> a{{c.a, c.b}, s}, b{{other.a, other.b}, os};
        return std::min(a, b);
    };

    State cur{{0, 0}, 0};
    std::set<State> visited;
    std::map<decltype(wall_key({0, 0}, 0)), int> walls;
    std::set<Cell> boundary_cells;
    for (int deg : word) {
        if (!visited.insert(cur).second)
            throw InvalidCode("parse_bec: boundary walk intersects itself");
        if (++walls[wall_key(cur.c, cur.s)] > 1)
            throw InvalidCode("parse_bec: boundary touches itself along an edge");
        boundary_cells.insert(cur.c);
        if (deg == 2) {
            cur.s = (cur.s + 1) % 6;
        } else {
            Cell nb = cur.c + kHexDir[(cur.s + 1) % 6];
            cur = {nb, (cur.s + 5) % 6};
        }
    }
    if (!(cur.c == Cell{0, 0} && cur.s == 0))
        throw InvalidCode("parse_bec: boundary walk does not close");

    // fill the enclosed region, staying inside the boundary's bounding box
    int mina = 0, maxa = 0, minb = 0, maxb = 0;
    for (Cell c : boundary_cells) {
        mina = std::min(mina, c.a);
        maxa = std::max(maxa, c.a);
        minb = std::min(minb, c.b);
        maxb = std::max(maxb, c.b);
    }
    std::set<Cell> region(boundary_cells.begin(), boundary_cells.end());
    std::queue<Cell> q;
    for (Cell c : boundary_cells) q.push(c);
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (int s = 0; s < 6; ++s) {
            if (walls.count(wall_key(c, s))) continue;
            Cell nb = c + kHexDir[s];
            if (region.count(nb)) continue;
            if (nb.a < mina || nb.a > maxa || nb.b < minb || nb.b > maxb)
                throw InvalidCode("parse_bec: region escapes its boundary");
            region.insert(nb);
            q.push(nb);
        }
    }

    std::vector<Cell> cells(region.begin(), region.end());
    if (!polyhex_connected(cells) || !polyhex_hole_free(cells))
        throw InvalidCode("parse_bec: region is not a benzenoid");
    PlanarPatch patch = to_patch(normalized(std::move(cells)));

    if (boundary_edge_code(patch) != canonical_code_string(code))
        throw InvalidCode("parse_bec: code does not round-trip");
    return patch;
}

} // namespace altan
