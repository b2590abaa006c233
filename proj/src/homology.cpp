#include "fincat/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fincat {

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

bool mat_is_zero(const IntMatrix& x) {
    for (const auto& v : x.a)
        if (v != 0) return false;
    return true;
}

ChainComplex chains(const TruncatedSSet& x) {
    ChainComplex cc;
    cc.dim = x.dim;
    cc.basis.resize(x.dim + 1);
    std::vector<std::vector<int>> pos(x.dim + 1);  // simplex -> basis position, -1 degenerate
    for (int k = 0; k <= x.dim; ++k) {
        pos[k].assign(x.counts[k], -1);
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            if (!x.degenerate[k][s0]) {
                pos[k][s0] = static_cast<int>(cc.basis[k].size());
                cc.basis[k].push_back(s0);
            }
    }
    cc.boundary.resize(x.dim + 1);
    cc.boundary[0] = IntMatrix(0, static_cast<int>(cc.basis[0].size()));
    for (int k = 1; k <= x.dim; ++k) {
        IntMatrix m(static_cast<int>(cc.basis[k - 1].size()), static_cast<int>(cc.basis[k].size()));
        for (int col = 0; col < m.cols; ++col) {
            int s0 = cc.basis[k][col];
            for (int i = 0; i <= k; ++i) {
                int f0 = x.face[k][i][s0];
                if (pos[k - 1][f0] < 0) continue;  // degenerate faces vanish in normalized chains
                m.at(pos[k - 1][f0], col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundary[k] = std::move(m);
    }
    return cc;
}

std::vector<std::string> check_boundary_square(const ChainComplex& cc) {
    std::vector<std::string> out;
    for (int k = 1; k + 1 <= cc.dim; ++k)
        if (!mat_is_zero(mat_mul(cc.boundary[k], cc.boundary[k + 1])))
            out.push_back("boundary square nonzero at degree " + std::to_string(k + 1));
    return out;
}

SmithResult smith_normal_form(IntMatrix m) {
    SmithResult res;
    const int n = std::min(m.rows, m.cols);
    auto swap_rows = [&](int a, int b) {
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    };
    auto add_row = [&](int dst, int src, const BigInt& q) {
        for (int j = 0; j < m.cols; ++j) m.at(dst, j) += q * m.at(src, j);
    };
    auto add_col = [&](int dst, int src, const BigInt& q) {
        for (int i = 0; i < m.rows; ++i) m.at(i, dst) += q * m.at(i, src);
    };

    for (int t = 0; t < n; ++t) {
        // pivot: minimal absolute nonzero entry of the trailing block
        int pr = -1, pc = -1;
        BigInt best;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                BigInt v = abs(m.at(i, j));
                if (pr < 0 || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // trailing block is zero
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = m.at(i, t) / m.at(t, t);
                add_row(i, t, -q);
                if (m.at(i, t) != 0) {  // remainder smaller than pivot: swap up and restart
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = m.at(t, j) / m.at(t, t);
                add_col(j, t, -q);
                if (m.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: the pivot must divide the trailing block
            for (int i = t + 1; i < m.rows && clean; ++i)
                for (int j = t + 1; j < m.cols && clean; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (m.at(t, t) < 0) {
            for (int j = 0; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
        }
    }
    for (int t = 0; t < n; ++t) {
        if (m.at(t, t) == 0) break;
        res.invariant_factors.push_back(m.at(t, t));
        ++res.rank;
    }
    return res;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < groups.size(); ++k) {
        os << "H_" << k << " = ";
        const auto& g = groups[k];
        bool first = true;
        if (g.betti > 0) {
            os << "Z";
            if (g.betti > 1) os << "^" << g.betti;
            first = false;
        }
        for (const auto& t : g.torsion) {
            if (!first) os << " + ";
            os << "Z/" << t;
            first = false;
        }
        if (first) os << "0";
        if (!g.reliable) os << "  (unreliable: truncation)";
        os << "\n";
    }
    return os.str();
}

HomologyResult homology(const TruncatedSSet& x, int max_degree) {
    if (x.dim < max_degree + 1)
        throw std::invalid_argument(
            "homology: truncation insufficient, need dim >= max_degree + 1");
    auto cc = chains(x);
    {
        auto findings = check_boundary_square(cc);
        if (!findings.empty()) throw std::logic_error("homology: " + findings.front());
    }
    HomologyResult res;
    std::vector<SmithResult> snf(x.dim + 1);
    for (int k = 0; k <= std::min(x.dim, max_degree + 1); ++k)
        snf[k] = smith_normal_form(cc.boundary[k]);
    for (int k = 0; k <= max_degree; ++k) {
        HomologyGroup g;
        long long dim_k = static_cast<long long>(cc.basis[k].size());
        long long rank_dk = snf[k].rank;          // d_k: C_k -> C_{k-1}; zero map for k = 0
        long long rank_dk1 = snf[k + 1].rank;
        g.betti = dim_k - rank_dk - rank_dk1;
        for (const auto& f : snf[k + 1].invariant_factors)
            if (f > 1) g.torsion.push_back(f);
        g.reliable = k <= x.dim - 1;
        res.groups.push_back(std::move(g));
    }
    return res;
}

HomologyComparison homology_equal(const TruncatedSSet& x, const TruncatedSSet& y, int max_degree) {
    auto hx = homology(x, max_degree), hy = homology(y, max_degree);
    HomologyComparison out;
    for (int k = 0; k <= max_degree; ++k)
        if (hx.groups[k].betti != hy.groups[k].betti ||
            hx.groups[k].torsion != hy.groups[k].torsion) {
            out.equal = false;
            out.differing_degrees.push_back(k);
        }
    return out;
}

int path_components(const TruncatedSSet& x) {
    std::vector<int> parent(x.counts[0]);
    for (int i = 0; i < x.counts[0]; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    if (x.dim >= 1)
        for (int e = 0; e < x.counts[1]; ++e) {
            int a = find(x.face[1][0][e]), b = find(x.face[1][1][e]);
            if (a != b) parent[a] = b;
        }
    int n = 0;
    for (int i = 0; i < x.counts[0]; ++i)
        if (find(i) == i) ++n;
    return n;
}

}  // namespace fincat
