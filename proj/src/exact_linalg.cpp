#include "altan/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace altan {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.n, g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u]) m.at(u, v) = 1;
    return m;
}

int rank_exact(IntMatrix m) {
    int r = 0;
    Int prev = 1;
    Int num;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (sgn(m.at(i, c)) == 0) continue;
            if (p < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(p, c).get_mpz_t()) > 0) p = i;
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j) {
                num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

namespace {

// Bareiss over int64 with __int128 intermediates. Entries are kept below
// 2^62 so cross products cannot overflow the 128-bit difference; returns -1
// as soon as that bound would be breached and the caller falls back to GMP.
int rank_fast(const Graph& g) {
    const int n = g.n;
    std::vector<int64_t> a(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.adjacency[u]) a[static_cast<size_t>(u) * n + v] = 1;

    const int64_t kLimit = int64_t(1) << 62;
    int r = 0;
    int64_t prev = 1;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        int64_t best = 0;
        for (int i = r; i < n; ++i) {
            int64_t x = a[static_cast<size_t>(i) * n + c];
            if (x == 0) continue;
            int64_t ax = x < 0 ? -x : x;
            if (p < 0 || ax > best) {
                p = i;
                best = ax;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < n; ++j)
                std::swap(a[static_cast<size_t>(r) * n + j], a[static_cast<size_t>(p) * n + j]);
        const int64_t* rowr = &a[static_cast<size_t>(r) * n];
        for (int i = r + 1; i < n; ++i) {
            int64_t* rowi = &a[static_cast<size_t>(i) * n];
            for (int j = c + 1; j < n; ++j) {
                __int128 num = static_cast<__int128>(rowr[c]) * rowi[j] -
                               static_cast<__int128>(rowi[c]) * rowr[j];
                __int128 q = num / prev;
                if (q >= kLimit || q <= -kLimit) return -1;
                rowi[j] = static_cast<int64_t>(q);
            }
            rowi[c] = 0;
        }
        prev = rowr[c];
        ++r;
    }
    return r;
}

} // namespace

int nullity(const Graph& g) {
    if (g.n == 0) return 0;
    if (g.n <= 160) {
        int r = rank_fast(g);
        if (r >= 0) return g.n - r;
    }
    return g.n - rank_exact(adjacency_matrix(g));
}

std::vector<RationalVector> kernel_basis(const IntMatrix& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<RationalVector> a(rows, RationalVector(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat diag = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= diag;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    std::vector<RationalVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rat(0));
        v[f] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][f];

        // Scale to primitive integer form with positive leading entry.
        Int lcm = 1;
        for (const Rat& x : v) {
            Int den = x.get_den();
            Int gcd;
            mpz_gcd(gcd.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / gcd * den;
        }
        Int content = 0;
        for (Rat& x : v) {
            x *= Rat(lcm);
            x.canonicalize();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
        }
        if (content > 1)
            for (Rat& x : v) {
                x /= Rat(content);
                x.canonicalize();
            }
        for (const Rat& x : v) {
            if (sgn(x) == 0) continue;
            if (sgn(x) < 0)
                for (Rat& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int nullity_float_oracle(const Graph& g, double tol) {
    if (g.n == 0) return 0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u]) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("nullity_float_oracle: eigensolver did not converge");
    int count = 0;
    for (int i = 0; i < g.n; ++i)
        if (std::abs(solver.eigenvalues()[i]) < tol) ++count;
    return count;
}

} // namespace altan
