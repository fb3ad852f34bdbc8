#include "altan/kernel.hpp"

#include <algorithm>

namespace altan {

bool check_local_condition(const Graph& g, const VertexWeighting& q, const Rat& lambda) {
    if (static_cast<int>(q.size()) != g.n)
        throw IndexOutOfRange("check_local_condition: weighting size does not match graph");
    Rat acc;
    for (int v = 0; v < g.n; ++v) {
        acc = 0;
        for (int u : g.adjacency[v]) acc += q[u];
        if (acc != lambda * q[v]) return false;
    }
    return true;
}

Rat functional_C(const VertexWeighting& q, const AttachmentSet& H) {
    Rat c = 0;
    for (int i = 1; i <= H.h(); ++i) {
        int v = H.vertices[i - 1];
        if (v < 0 || v >= static_cast<int>(q.size()))
            throw IndexOutOfRange("functional_C: attachment vertex out of range");
        if (i % 2 == 0)
            c += q[v];
        else
            c -= q[v];
    }
    return c;
}

Rat functional_D(const VertexWeighting& q, const std::vector<int>& block) {
    AttachmentSet H;
    H.vertices = block;
    return functional_C(q, H);
}

VertexWeighting special_vector(const AltanPair& pair) {
    if (pair.level < 1)
        throw InvalidAttachment("special_vector: pair is not the result of an altan step");
    const int h = pair.y_range.second - pair.y_range.first;
    if (h % 2 != 0)
        throw OddAttachment("special_vector: attachment size " + std::to_string(h) + " is odd");
    VertexWeighting s(pair.graph.n, Rat(0));
    for (int i = 1; i <= h; ++i) s[pair.y_range.first + i - 1] = (i % 2 == 0) ? 1 : -1;
    if (!check_local_condition(pair.graph, s, Rat(0)))
        throw IdentityViolation("special_vector: certification failed");
    return s;
}

VertexWeighting extend_kernel_vector(const AltanPair& pair, const VertexWeighting& q,
                                     std::optional<Rat> t_opt) {
    const Graph& g = pair.graph;
    const int n = g.n;
    const int h = pair.attachment.h();
    if (!check_local_condition(g, q, Rat(0)))
        throw NotAKernelVector("extend_kernel_vector: input is not in the kernel");

    Rat c = functional_C(q, pair.attachment);
    Rat t;
    if (h % 2 != 0) {
        t = c / 2;
        if (t_opt && *t_opt != t)
            throw NotExtendable("extend_kernel_vector: odd h forces t = C(q)/2", c);
    } else {
        if (sgn(c) != 0)
            throw NotExtendable("extend_kernel_vector: C(q) != 0 obstructs extension for even h", c);
        t = t_opt.value_or(Rat(0));
    }

    VertexWeighting out(n + 2 * h, Rat(0));
    for (int v = 0; v < n; ++v) out[v] = q[v];
    // x block stays zero; y_j follows the alternating partial sums of q on
    // the attachment, with q~(y_h) = t.
    Rat partial = 0; // sum_{i<=j} (-1)^{i+1} q(v_i)
    for (int j = 1; j <= h; ++j) {
        int vj = pair.attachment.vertices[j - 1];
        if (j % 2 == 1)
            partial += q[vj];
        else
            partial -= q[vj];
        Rat val = t + partial;
        if (j % 2 != 0) val = -val;
        out[n + h + j - 1] = val;
    }
    if (out[n + 2 * h - 1] != t)
        throw IdentityViolation("extend_kernel_vector: closing value disagrees with t");

    AltanPair up = altan(pair);
    if (!check_local_condition(up.graph, out, Rat(0)))
        throw IdentityViolation("extend_kernel_vector: certification failed");
    return out;
}

VertexWeighting contract_kernel_vector(const AltanPair& pair, const VertexWeighting& q) {
    if (pair.level < 1)
        throw InvalidAttachment("contract_kernel_vector: pair is not the result of an altan step");
    if (static_cast<int>(q.size()) != pair.graph.n)
        throw IndexOutOfRange("contract_kernel_vector: weighting size does not match graph");
    if (!check_local_condition(pair.graph, q, Rat(0)))
        throw NotAKernelVector("contract_kernel_vector: input is not in the kernel");
    for (int x = pair.x_range.first; x < pair.x_range.second; ++x)
        if (sgn(q[x]) != 0)
            throw NotContractible("contract_kernel_vector: nonzero value on spoke vertex " +
                                      std::to_string(x),
                                  x);
    const int parent_n = pair.x_range.first;
    VertexWeighting out(q.begin(), q.begin() + parent_n);
    Graph parent = prefix_subgraph(pair.graph, parent_n);
    if (!check_local_condition(parent, out, Rat(0)))
        throw IdentityViolation("contract_kernel_vector: restriction is not a parent kernel vector");
    return out;
}

ExcessReport excess_nullity(const AltanPair& pair) {
    ExcessReport r;
    r.h = pair.attachment.h();
    r.h_even = (r.h % 2 == 0);
    r.parent_nullity = nullity(pair.graph);
    r.altan_nullity = nullity(altan(pair).graph);
    r.excess = r.altan_nullity - r.parent_nullity;
    if (r.h_even) {
        if (r.excess < 0 || r.excess > 2)
            throw TheoremViolation("excess_nullity: excess " + std::to_string(r.excess) +
                                   " outside {0,1,2} for even h=" + std::to_string(r.h));
    } else if (r.excess != 0) {
        throw TheoremViolation("excess_nullity: nonzero excess " + std::to_string(r.excess) +
                               " for odd h=" + std::to_string(r.h));
    }
    return r;
}

bool verify_iterated_stability(const AltanPair& pair, int k_max) {
    AltanPair cur = altan(pair);
    int eta1 = nullity(cur.graph);
    for (int k = 2; k <= k_max; ++k) {
        cur = altan(cur);
        if (nullity(cur.graph) != eta1) return false;
    }
    return true;
}

std::vector<VertexWeighting> rebase_basis(const std::vector<VertexWeighting>& basis,
                                          const AttachmentSet& H) {
    std::vector<Rat> c(basis.size());
    size_t lead = basis.size();
    for (size_t k = 0; k < basis.size(); ++k) {
        c[k] = functional_C(basis[k], H);
        if (lead == basis.size() && sgn(c[k]) != 0) lead = k;
    }
    if (lead == basis.size()) return basis;

    std::vector<VertexWeighting> out;
    out.reserve(basis.size());
    out.push_back(basis[lead]);
    for (size_t k = 0; k < basis.size(); ++k) {
        if (k == lead) continue;
        VertexWeighting v = basis[k];
        if (sgn(c[k]) != 0) {
            Rat lambda = -c[k] / c[lead];
            for (size_t i = 0; i < v.size(); ++i) v[i] += lambda * basis[lead][i];
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace altan
