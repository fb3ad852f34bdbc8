#include "altan/polyhex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace altan {

namespace {

Cell rot60(Cell c) { return {-c.b, c.a + c.b}; }
Cell mirror(Cell c) { return {c.b, c.a}; }

// the 12 point symmetries of the hexagonal lattice
std::vector<Cell> apply_symmetry(const std::vector<Cell>& cells, int sym) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (Cell c : cells) {
        if (sym >= 6) c = mirror(c);
        for (int r = 0; r < sym % 6; ++r) c = rot60(c);
        out.push_back(c);
    }
    return out;
}

Cell apply_symmetry_cell(Cell c, int sym) {
    if (sym >= 6) c = mirror(c);
    for (int r = 0; r < sym % 6; ++r) c = rot60(c);
    return c;
}

Cell normalizing_shift(const std::vector<Cell>& cells) {
    int mina = std::numeric_limits<int>::max(), minb = mina;
    for (Cell c : cells) {
        mina = std::min(mina, c.a);
        minb = std::min(minb, c.b);
    }
    return {-mina, -minb};
}

} // namespace

Polyhex normalized(std::vector<Cell> cells) {
    if (cells.empty()) return {};
    Cell s = normalizing_shift(cells);
    for (Cell& c : cells) c = c + s;
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return {std::move(cells)};
}

Polyhex canonical_polyhex(const Polyhex& p) {
    Polyhex best;
    for (int sym = 0; sym < 12; ++sym) {
        Polyhex cand = normalized(apply_symmetry(p.cells, sym));
        if (sym == 0 || cand < best) best = std::move(cand);
    }
    return best;
}

bool polyhex_connected(const std::vector<Cell>& cells) {
    if (cells.size() <= 1) return true;
    std::set<Cell> all(cells.begin(), cells.end());
    std::set<Cell> seen;
    std::queue<Cell> q;
    q.push(cells[0]);
    seen.insert(cells[0]);
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (Cell d : kHexDir) {
            Cell nb = c + d;
            if (all.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                q.push(nb);
            }
        }
    }
    return seen.size() == all.size();
}

bool polyhex_hole_free(const std::vector<Cell>& cells) {
    if (cells.empty()) return true;
    int mina = cells[0].a, maxa = cells[0].a, minb = cells[0].b, maxb = cells[0].b;
    for (Cell c : cells) {
        mina = std::min(mina, c.a);
        maxa = std::max(maxa, c.a);
        minb = std::min(minb, c.b);
        maxb = std::max(maxb, c.b);
    }
    --mina, --minb, ++maxa, ++maxb;
    std::set<Cell> occupied(cells.begin(), cells.end());
    std::set<Cell> seen;
    std::queue<Cell> q;
    Cell start{mina, minb};
    q.push(start);
    seen.insert(start);
    size_t outside = 1;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (Cell d : kHexDir) {
            Cell nb = c + d;
            if (nb.a < mina || nb.a > maxa || nb.b < minb || nb.b > maxb) continue;
            if (occupied.count(nb) || seen.count(nb)) continue;
            seen.insert(nb);
            ++outside;
            q.push(nb);
        }
    }
    size_t box = static_cast<size_t>(maxa - mina + 1) * static_cast<size_t>(maxb - minb + 1);
    return outside + occupied.size() == box;
}

bool is_catafused(const Polyhex& p) {
    std::set<Cell> all(p.cells.begin(), p.cells.end());
    for (Cell c : p.cells)
        for (int k = 0; k < 6; ++k)
            if (all.count(c + kHexDir[k]) && all.count(c + kHexDir[(k + 1) % 6])) return false;
    return true;
}

namespace {

std::vector<Cell> removable_cells(const std::vector<Cell>& cells) {
    std::vector<Cell> out;
    if (cells.size() == 1) return cells;
    for (size_t i = 0; i < cells.size(); ++i) {
        std::vector<Cell> rest;
        rest.reserve(cells.size() - 1);
        for (size_t j = 0; j < cells.size(); ++j)
            if (j != i) rest.push_back(cells[j]);
        if (polyhex_connected(rest) && polyhex_hole_free(rest)) out.push_back(cells[i]);
    }
    return out;
}

// Accepts the augmented polyhex iff the just-added cell is, under some
// canonical-form symmetry, the maximal removable cell. Together with
// orbit-deduplicated candidate cells this yields one generation path per
// isomorphism class (canonical augmentation).
bool accept_child(const Polyhex& child, Cell added) {
    std::vector<std::pair<int, Cell>> canon_syms; // (sym, shift) reaching the canonical form
    Polyhex best;
    for (int sym = 0; sym < 12; ++sym) {
        std::vector<Cell> img = apply_symmetry(child.cells, sym);
        Cell shift = normalizing_shift(img);
        for (Cell& c : img) c = c + shift;
        std::sort(img.begin(), img.end());
        Polyhex cand{std::move(img)};
        if (sym == 0 || cand < best) {
            best = cand;
            canon_syms.clear();
            canon_syms.emplace_back(sym, shift);
        } else if (cand == best) {
            canon_syms.emplace_back(sym, shift);
        }
    }

    std::vector<Cell> rem = removable_cells(child.cells);
    bool added_hits_max = false;
    Cell max_img{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
    for (auto [sym, shift] : canon_syms) {
        for (Cell d : rem) {
            Cell img = apply_symmetry_cell(d, sym) + shift;
            if (max_img < img) {
                max_img = img;
                added_hits_max = (d == added);
            } else if (img == max_img && d == added) {
                added_hits_max = true;
            }
        }
    }
    return added_hits_max;
}

void enumerate_rec(const Polyhex& p, int eps, bool catafused_only,
                   const std::function<void(const Polyhex&)>& visit) {
    if (p.size() == eps) {
        visit(p);
        return;
    }

    // stabiliser of p, for candidate-orbit deduplication
    std::vector<std::pair<int, Cell>> stab;
    for (int sym = 0; sym < 12; ++sym) {
        std::vector<Cell> img = apply_symmetry(p.cells, sym);
        Cell shift = normalizing_shift(img);
        for (Cell& c : img) c = c + shift;
        std::sort(img.begin(), img.end());
        if (img == p.cells) stab.emplace_back(sym, shift);
    }

    std::set<Cell> occupied(p.cells.begin(), p.cells.end());
    std::set<Cell> cands;
    for (Cell c : p.cells)
        for (Cell d : kHexDir)
            if (!occupied.count(c + d)) cands.insert(c + d);

    for (Cell c : cands) {
        bool is_orbit_min = true;
        for (auto [sym, shift] : stab) {
            Cell img = apply_symmetry_cell(c, sym) + shift;
            if (img < c) {
                is_orbit_min = false;
                break;
            }
        }
        if (!is_orbit_min) continue;

        std::vector<Cell> grown = p.cells;
        grown.push_back(c);
        if (!polyhex_hole_free(grown)) continue;
        Cell shift = normalizing_shift(grown);
        for (Cell& g : grown) g = g + shift;
        std::sort(grown.begin(), grown.end());
        Polyhex child{std::move(grown)};
        if (catafused_only && !is_catafused(child)) continue;
        if (!accept_child(child, c + shift)) continue;
        enumerate_rec(child, eps, catafused_only, visit);
    }
}

void enumerate_impl(int eps, bool catafused_only, const std::function<void(const Polyhex&)>& visit,
                    int cap) {
    if (eps < 1) throw Error("enumerate: eps must be positive");
    if (eps > cap)
        throw CapExceeded("enumerate: eps " + std::to_string(eps) + " exceeds cap " +
                          std::to_string(cap) + "; raise the cap explicitly");
    Polyhex seed{{Cell{0, 0}}};
    enumerate_rec(seed, eps, catafused_only, visit);
}

} // namespace

void enumerate_benzenoids(int eps, const std::function<void(const Polyhex&)>& visit, int cap) {
    enumerate_impl(eps, false, visit, cap);
}

void enumerate_catafused(int eps, const std::function<void(const Polyhex&)>& visit, int cap) {
    enumerate_impl(eps, true, visit, cap);
}

std::vector<std::pair<Polyhex, ConvexSpec>> enumerate_convex(int eps_max) {
    if (eps_max < 1) throw Error("enumerate_convex: eps_max must be positive");
    auto tri = [](long long k) { return k * (k + 1) / 2; };

    std::map<Polyhex, ConvexSpec> seen;
    for (int X = 0; X < eps_max; ++X) {
        for (int Y = X; Y < eps_max; ++Y) { // Y >= X; the transpose is a reflection
            // smallest achievable cell count for this bounding pair
            if (static_cast<long long>(X + 1) * (Y + 1 - X) > eps_max) break;
            for (int s0 = 0; s0 <= std::min(X, Y); ++s0) {
                for (int s1 = std::max(X, Y); s1 <= X + Y; ++s1) {
                    int t = X + Y - s1;
                    long long count = static_cast<long long>(X + 1) * (Y + 1) - tri(s0) - tri(t);
                    if (count > eps_max) continue;

                    std::vector<Cell> cells;
                    cells.reserve(count);
                    for (int x = 0; x <= X; ++x)
                        for (int y = 0; y <= Y; ++y)
                            if (x + y >= s0 && x + y <= s1) cells.push_back({x, y});
                    if (static_cast<long long>(cells.size()) != count)
                        throw IdentityViolation("enumerate_convex: cell-count formula mismatch");

                    ConvexSpec spec;
                    spec.sides[0] = std::min(X, s1) - std::max(0, s0) + 1;        // y = 0
                    spec.sides[1] = std::min(Y, s1 - X) - std::max(0, s0 - X) + 1; // x = X
                    spec.sides[2] = std::min(X, s1) - std::max(0, s1 - Y) + 1;     // x+y = s1
                    spec.sides[3] = std::min(X, s1 - Y) - std::max(0, s0 - Y) + 1; // y = Y
                    spec.sides[4] = std::min(Y, s1) - std::max(0, s0) + 1;         // x = 0
                    spec.sides[5] = std::min(X, s0) - std::max(0, s0 - Y) + 1;     // x+y = s0
                    for (int s : spec.sides)
                        if (s < 1) throw IdentityViolation("enumerate_convex: degenerate side");
                    for (int k = 0; k < 3; ++k)
                        if (spec.sides[k] + spec.sides[(k + 1) % 6] !=
                            spec.sides[(k + 3) % 6] + spec.sides[(k + 4) % 6])
                            throw IdentityViolation("enumerate_convex: side closure violated");

                    // canonicalise the side vector over the dihedral group
                    std::array<int, 6> best = spec.sides;
                    for (int refl = 0; refl < 2; ++refl) {
                        std::array<int, 6> cur = spec.sides;
                        if (refl) std::reverse(cur.begin(), cur.end());
                        for (int r = 0; r < 6; ++r) {
                            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                            if (cur < best) best = cur;
                        }
                    }
                    spec.sides = best;

                    Polyhex canon = canonical_polyhex(normalized(cells));
                    seen.emplace(std::move(canon), spec);
                }
            }
        }
    }

    std::vector<std::pair<Polyhex, ConvexSpec>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
        return l.first < r.first;
    });
    return out;
}

PlanarPatch to_patch(const Polyhex& p) {
    if (p.size() == 0) throw Error("to_patch: empty polyhex");

    struct Pt {
        int x, y;
        auto operator<=>(const Pt&) const = default;
    };
    std::set<Pt> verts;
    std::set<std::pair<Pt, Pt>> edge_set;
    auto add_edge = [&](Pt u, Pt v) {
        if (v < u) std::swap(u, v);
        edge_set.insert({u, v});
    };

    for (Cell c : p.cells) {
        int x0 = 2 * c.a + c.b, y0 = c.b;
        Pt b0{x0, y0}, b1{x0 + 1, y0}, b2{x0 + 2, y0};
        Pt t0{x0, y0 + 1}, t1{x0 + 1, y0 + 1}, t2{x0 + 2, y0 + 1};
        for (Pt q : {b0, b1, b2, t0, t1, t2}) verts.insert(q);
        add_edge(b0, b1);
        add_edge(b1, b2);
        add_edge(t0, t1);
        add_edge(t1, t2);
        add_edge(b0, t0);
        add_edge(b2, t2);
    }

    std::map<Pt, int> id;
    int next_id = 0;
    for (Pt q : verts) id[q] = next_id++;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_set.size());
    for (const auto& [u, v] : edge_set) edges.emplace_back(id[u], id[v]);
    Graph g = make_graph(next_id, edges);

    auto has = [&](Pt q) { return verts.count(q) != 0; };
    auto connected = [&](Pt u, Pt v) {
        if (!has(v)) return false;
        Pt a = u, b = v;
        if (b < a) std::swap(a, b);
        return edge_set.count({a, b}) != 0;
    };

    std::vector<std::vector<int>> rot(next_id);
    for (const auto& [q, vid] : id) {
        std::vector<Pt> order;
        bool even = ((q.x + q.y) % 2 + 2) % 2 == 0;
        if (even)
            order = {Pt{q.x + 1, q.y}, Pt{q.x, q.y + 1}, Pt{q.x - 1, q.y}};
        else
            order = {Pt{q.x + 1, q.y}, Pt{q.x - 1, q.y}, Pt{q.x, q.y - 1}};
        for (Pt nb : order)
            if (connected(q, nb)) rot[vid].push_back(id[nb]);
    }

    try {
        return make_patch(g, rot);
    } catch (const AmbiguousOuterFace&) {
        if (p.size() != 1) throw;
        // single hexagon: both faces see every degree-2 vertex; the bounded
        // face is the one matching the cell's CCW corner cycle
        Cell c = p.cells[0];
        int x0 = 2 * c.a + c.b, y0 = c.b;
        std::vector<int> ccw = {id[Pt{x0, y0}],     id[Pt{x0 + 1, y0}],     id[Pt{x0 + 2, y0}],
                                id[Pt{x0 + 2, y0 + 1}], id[Pt{x0 + 1, y0 + 1}], id[Pt{x0, y0 + 1}]};
        auto matches_ccw = [&](const std::vector<int>& face) {
            if (face.size() != ccw.size()) return false;
            for (size_t s = 0; s < face.size(); ++s) {
                bool ok = true;
                for (size_t i = 0; i < ccw.size(); ++i)
                    if (face[(s + i) % face.size()] != ccw[i]) {
                        ok = false;
                        break;
                    }
                if (ok) return true;
            }
            return false;
        };
        // rebuild the face list to pick the outer index explicitly
        PlanarPatch tmp = make_patch(g, rot, 0);
        int outer = matches_ccw(tmp.faces[0]) ? 1 : 0;
        return make_patch(g, rot, outer);
    }
}

} // namespace altan
