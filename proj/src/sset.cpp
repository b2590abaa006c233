#include "fincat/sset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fincat {

void TruncatedSSet::init_tables() {
    face.assign(dim + 1, {});
    degen.assign(dim + 1, {});
    degenerate.assign(dim + 1, {});
    for (int k = 0; k <= dim; ++k) {
        degenerate[k].assign(counts[k], 0);
        if (k >= 1) face[k].assign(k + 1, std::vector<int>(counts[k], -1));
        if (k < dim) degen[k].assign(k + 1, std::vector<int>(counts[k], -1));
    }
}

void TruncatedSSet::recompute_degeneracy_flags() {
    for (int k = 0; k <= dim; ++k) degenerate[k].assign(counts[k], 0);
    for (int k = 0; k + 1 <= dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < counts[k]; ++s0) degenerate[k + 1][degen[k][i][s0]] = 1;
}

std::vector<std::string> validate_sset(const TruncatedSSet& x) {
    std::vector<std::string> out;
    auto fail = [&](int k, int s0, const std::string& what) {
        out.push_back("level " + std::to_string(k) + " simplex " + std::to_string(s0) + ": " + what);
    };
    if (static_cast<int>(x.counts.size()) != x.dim + 1) return {"counts size mismatch"};
    for (int k = 0; k <= x.dim; ++k) {
        if (k >= 1) {
            if (static_cast<int>(x.face[k].size()) != k + 1) return {"face table arity mismatch"};
            for (int i = 0; i <= k; ++i)
                for (int s0 = 0; s0 < x.counts[k]; ++s0) {
                    int v = x.face[k][i][s0];
                    if (v < 0 || v >= x.counts[k - 1]) fail(k, s0, "face out of range");
                }
        }
        if (k < x.dim) {
            if (static_cast<int>(x.degen[k].size()) != k + 1) return {"degeneracy table arity mismatch"};
            for (int i = 0; i <= k; ++i)
                for (int s0 = 0; s0 < x.counts[k]; ++s0) {
                    int v = x.degen[k][i][s0];
                    if (v < 0 || v >= x.counts[k + 1]) fail(k, s0, "degeneracy out of range");
                }
        }
    }
    if (!out.empty()) return out;

    // d_i d_j = d_{j-1} d_i (i < j)
    for (int k = 2; k <= x.dim; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                for (int s0 = 0; s0 < x.counts[k]; ++s0)
                    if (x.face[k - 1][i][x.face[k][j][s0]] != x.face[k - 1][j - 1][x.face[k][i][s0]])
                        fail(k, s0, "d_i d_j identity fails");
    // s_i s_j = s_{j+1} s_i (i <= j)
    for (int k = 0; k + 2 <= x.dim; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
                for (int s0 = 0; s0 < x.counts[k]; ++s0)
                    if (x.degen[k + 1][i][x.degen[k][j][s0]] !=
                        x.degen[k + 1][j + 1][x.degen[k][i][s0]])
                        fail(k, s0, "s_i s_j identity fails");
    // d_i s_j mixed identities
    for (int k = 0; k + 1 <= x.dim; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k + 1; ++i)
                for (int s0 = 0; s0 < x.counts[k]; ++s0) {
                    int v = x.face[k + 1][i][x.degen[k][j][s0]];
                    if (i == j || i == j + 1) {
                        if (v != s0) fail(k, s0, "d_i s_j = id fails");
                    } else if (i < j) {
                        if (k < 1 || v != x.degen[k - 1][j - 1][x.face[k][i][s0]])
                            fail(k, s0, "d_i s_j (i<j) fails");
                    } else {  // i > j + 1
                        if (k < 1 || v != x.degen[k - 1][j][x.face[k][i - 1][s0]])
                            fail(k, s0, "d_i s_j (i>j+1) fails");
                    }
                }
    // degeneracy flags
    std::vector<std::vector<char>> want(x.dim + 1);
    for (int k = 0; k <= x.dim; ++k) want[k].assign(x.counts[k], 0);
    for (int k = 0; k + 1 <= x.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < x.counts[k]; ++s0) want[k + 1][x.degen[k][i][s0]] = 1;
    for (int k = 0; k <= x.dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            if (x.degenerate[k][s0] != want[k][s0]) fail(k, s0, "degeneracy flag wrong");
    return out;
}

TruncatedSSet standard_simplex(int n, int dim) {
    TruncatedSSet x;
    x.name = "Delta" + std::to_string(n);
    x.dim = dim;
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    std::vector<std::vector<std::vector<int>>> tuples(dim + 1);
    std::function<void(int, std::vector<int>&)> gen = [&](int k, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == k + 1) {
            index[k][cur] = static_cast<int>(tuples[k].size());
            tuples[k].push_back(cur);
            return;
        }
        for (int v = cur.empty() ? 0 : cur.back(); v <= n; ++v) {
            cur.push_back(v);
            gen(k, cur);
            cur.pop_back();
        }
    };
    for (int k = 0; k <= dim; ++k) {
        std::vector<int> cur;
        gen(k, cur);
    }
    x.counts.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) x.counts[k] = static_cast<int>(tuples[k].size());
    x.init_tables();
    for (int k = 1; k <= dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            for (int i = 0; i <= k; ++i) {
                auto t = tuples[k][s0];
                t.erase(t.begin() + i);
                x.face[k][i][s0] = index[k - 1].at(t);
            }
    for (int k = 0; k < dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            for (int i = 0; i <= k; ++i) {
                auto t = tuples[k][s0];
                t.insert(t.begin() + i, t[i]);
                x.degen[k][i][s0] = index[k + 1].at(t);
            }
    x.recompute_degeneracy_flags();
    return x;
}

std::vector<std::string> validate_sset_map(const SSetMap& f) {
    std::vector<std::string> out;
    if (f.dom.dim != f.cod.dim) return {"truncations differ"};
    const int d = f.dom.dim;
    if (static_cast<int>(f.level.size()) != d + 1) return {"levelwise data missing"};
    for (int k = 0; k <= d; ++k) {
        if (static_cast<int>(f.level[k].size()) != f.dom.counts[k])
            return {"level " + std::to_string(k) + " size mismatch"};
        for (int v : f.level[k])
            if (v < 0 || v >= f.cod.counts[k]) return {"image out of range"};
    }
    for (int k = 1; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < f.dom.counts[k]; ++s0)
                if (f.level[k - 1][f.dom.face[k][i][s0]] != f.cod.face[k][i][f.level[k][s0]])
                    out.push_back("does not commute with face " + std::to_string(i) +
                                  " at level " + std::to_string(k));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < f.dom.counts[k]; ++s0)
                if (f.level[k + 1][f.dom.degen[k][i][s0]] != f.cod.degen[k][i][f.level[k][s0]])
                    out.push_back("does not commute with degeneracy " + std::to_string(i) +
                                  " at level " + std::to_string(k));
    return out;
}

bool level_injective(const SSetMap& f, int k) {
    std::vector<char> seen(f.cod.counts[k], 0);
    for (int v : f.level[k]) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool level_surjective(const SSetMap& f, int k) {
    std::vector<char> seen(f.cod.counts[k], 0);
    for (int v : f.level[k]) seen[v] = 1;
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

int Nerve::index_of(int k, const std::vector<int>& ch) const {
    auto it = index[k].find(ch);
    return it == index[k].end() ? -1 : it->second;
}

Nerve nerve(const FinCategory& c, int dim) {
    Nerve n;
    n.X.name = "N_" + c.name;
    n.X.dim = dim;
    n.chain.resize(dim + 1);
    n.index.resize(dim + 1);
    long long total = 0;
    for (int x = 0; x < c.num_objects(); ++x) {
        n.index[0][{x}] = x;
        n.chain[0].push_back({x});
    }
    total += c.num_objects();
    for (int k = 1; k <= dim; ++k) {
        for (const auto& prev : n.chain[k - 1]) {
            int tail = k == 1 ? prev[0] : c.tgt(prev.back());
            for (int m = 0; m < c.num_morphisms(); ++m) {
                if (c.src(m) != tail) continue;
                auto ch = k == 1 ? std::vector<int>{m} : prev;
                if (k > 1) ch.push_back(m);
                if (++total > kSimplexGuard) throw guard_error("nerve exceeds simplex guard");
                n.index[k][ch] = static_cast<int>(n.chain[k].size());
                n.chain[k].push_back(std::move(ch));
            }
        }
    }
    TruncatedSSet& x = n.X;
    x.counts.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) x.counts[k] = static_cast<int>(n.chain[k].size());
    x.init_tables();
    auto vertex = [&](int k, int s0, int j) {  // j-th vertex of a chain
        const auto& ch = n.chain[k][s0];
        if (k == 0) return ch[0];
        return j == 0 ? c.src(ch[0]) : c.tgt(ch[j - 1]);
    };
    for (int k = 1; k <= dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0) {
            const auto& ch = n.chain[k][s0];
            for (int i = 0; i <= k; ++i) {
                std::vector<int> sub;
                if (k == 1) {
                    x.face[k][i][s0] = vertex(k, s0, i == 0 ? 1 : 0);
                    continue;
                }
                for (int j = 0; j < k; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (i == k && j == k - 1) continue;
                    if (0 < i && i < k && j == i - 1) {
                        sub.push_back(c.compose(ch[i], ch[i - 1]));
                        ++j;  // skip the next entry, consumed by the composition
                        continue;
                    }
                    sub.push_back(ch[j]);
                }
                x.face[k][i][s0] = n.index[k - 1].at(sub);
            }
        }
    for (int k = 0; k < dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            for (int i = 0; i <= k; ++i) {
                std::vector<int> ext;
                if (k == 0)
                    ext = {c.identity(n.chain[0][s0][0])};
                else {
                    const auto& ch = n.chain[k][s0];
                    ext.assign(ch.begin(), ch.begin() + i);
                    ext.push_back(c.identity(vertex(k, s0, i)));
                    ext.insert(ext.end(), ch.begin() + i, ch.end());
                }
                x.degen[k][i][s0] = n.index[k + 1].at(ext);
            }
    x.recompute_degeneracy_flags();
    return n;
}

namespace {

std::vector<int> map_chain(const Functor& f, int k, const std::vector<int>& ch) {
    std::vector<int> out;
    if (k == 0) return {f.obj_map[ch[0]]};
    out.reserve(ch.size());
    for (int m : ch) out.push_back(f.mor_map[m]);
    return out;
}

}  // namespace

SSetMap nerve_of_functor(const Functor& f, const Nerve& dom, const Nerve& cod) {
    SSetMap out;
    out.dom = dom.X;
    out.cod = cod.X;
    out.level.resize(dom.X.dim + 1);
    for (int k = 0; k <= dom.X.dim; ++k) {
        out.level[k].resize(dom.X.counts[k]);
        for (int s0 = 0; s0 < dom.X.counts[k]; ++s0) {
            int img = cod.index_of(k, map_chain(f, k, dom.chain[k][s0]));
            if (img < 0) throw std::logic_error("nerve_of_functor: image chain missing");
            out.level[k][s0] = img;
        }
    }
    return out;
}

SSetMap nerve_of_functor(const Functor& f, int dim) {
    return nerve_of_functor(f, nerve(f.dom, dim), nerve(f.cod, dim));
}

SSetPushout sset_pushout(const SSetMap& f, const SSetMap& g) {
    if (f.dom.dim != g.dom.dim) throw std::invalid_argument("sset_pushout: truncations differ");
    {
        auto e1 = validate_sset_map(f);
        auto e2 = validate_sset_map(g);
        if (!e1.empty() || !e2.empty())
            throw std::invalid_argument("sset_pushout: legs are not simplicial maps");
    }
    const int d = f.dom.dim;
    SSetPushout out;
    TruncatedSSet& p = out.P;
    p.name = "pushout_sset";
    p.dim = d;
    p.counts.assign(d + 1, 0);

    std::vector<std::vector<int>> cls_Y(d + 1), cls_Z(d + 1);
    for (int k = 0; k <= d; ++k) {
        const int nY = f.cod.counts[k], nZ = g.cod.counts[k];
        std::vector<int> parent(nY + nZ);
        for (int i = 0; i < nY + nZ; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int x = 0; x < f.dom.counts[k]; ++x) {
            int a = find(f.level[k][x]), b = find(nY + g.level[k][x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
        std::vector<int> cls(nY + nZ, -1);
        for (int s0 = 0; s0 < nY + nZ; ++s0) {
            int r = find(s0);
            if (cls[r] < 0) cls[r] = p.counts[k]++;
            cls[s0] = cls[r];
        }
        cls_Y[k].assign(cls.begin(), cls.begin() + nY);
        cls_Z[k].assign(cls.begin() + nY, cls.end());
    }
    p.init_tables();
    auto set_checked = [](int& slot, int v, const char* what) {
        if (slot >= 0 && slot != v) throw std::logic_error(std::string("sset_pushout: ") + what);
        slot = v;
    };
    for (int k = 1; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            for (int s0 = 0; s0 < f.cod.counts[k]; ++s0)
                set_checked(p.face[k][i][cls_Y[k][s0]], cls_Y[k - 1][f.cod.face[k][i][s0]],
                            "face not well-defined");
            for (int s0 = 0; s0 < g.cod.counts[k]; ++s0)
                set_checked(p.face[k][i][cls_Z[k][s0]], cls_Z[k - 1][g.cod.face[k][i][s0]],
                            "face not well-defined");
        }
    for (int k = 0; k < d; ++k)
        for (int i = 0; i <= k; ++i) {
            for (int s0 = 0; s0 < f.cod.counts[k]; ++s0)
                set_checked(p.degen[k][i][cls_Y[k][s0]], cls_Y[k + 1][f.cod.degen[k][i][s0]],
                            "degeneracy not well-defined");
            for (int s0 = 0; s0 < g.cod.counts[k]; ++s0)
                set_checked(p.degen[k][i][cls_Z[k][s0]], cls_Z[k + 1][g.cod.degen[k][i][s0]],
                            "degeneracy not well-defined");
        }
    p.recompute_degeneracy_flags();
    {
        auto findings = validate_sset(p);
        if (!findings.empty())
            throw std::logic_error("sset_pushout: invalid result: " + findings.front());
    }
    out.from_Y.dom = f.cod;
    out.from_Y.cod = p;
    out.from_Y.level = cls_Y;
    out.from_Z.dom = g.cod;
    out.from_Z.cod = p;
    out.from_Z.level = cls_Z;
    return out;
}

ComparisonReport comparison_map(const Functor& I, const Functor& F, const Functor& G,
                                const Functor& J, int dim) {
    ComparisonReport rep;
    Nerve nA = nerve(I.dom, dim), nB = nerve(I.cod, dim), nC = nerve(F.cod, dim);
    rep.nerve_D = nerve(G.cod, dim);
    SSetMap nI = nerve_of_functor(I, nA, nB);
    SSetMap nF = nerve_of_functor(F, nA, nC);
    rep.glued = sset_pushout(nI, nF);
    SSetMap nG = nerve_of_functor(G, nB, rep.nerve_D);
    SSetMap nJ = nerve_of_functor(J, nC, rep.nerve_D);

    rep.j.dom = rep.glued.P;
    rep.j.cod = rep.nerve_D.X;
    rep.j.level.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        rep.j.level[k].assign(rep.glued.P.counts[k], -1);
        for (int s0 = 0; s0 < nB.X.counts[k]; ++s0) {
            int& slot = rep.j.level[k][rep.glued.from_Y.level[k][s0]];
            if (slot >= 0 && slot != nG.level[k][s0])
                throw std::logic_error("comparison_map: cocone does not commute");
            slot = nG.level[k][s0];
        }
        for (int s0 = 0; s0 < nC.X.counts[k]; ++s0) {
            int& slot = rep.j.level[k][rep.glued.from_Z.level[k][s0]];
            if (slot >= 0 && slot != nJ.level[k][s0])
                throw std::logic_error("comparison_map: cocone does not commute");
            slot = nJ.level[k][s0];
        }
    }
    {
        auto findings = validate_sset_map(rep.j);
        if (!findings.empty())
            throw std::logic_error("comparison_map: not simplicial: " + findings.front());
    }
    for (int k = 0; k <= dim; ++k) {
        rep.injective.push_back(level_injective(rep.j, k));
        rep.surjective.push_back(level_surjective(rep.j, k));
    }
    rep.bijective_on_vertices = rep.injective[0] && rep.surjective[0];
    return rep;
}

namespace {

// enumerates all maps Lambda^k_i -> x as compatible (k+1)-tuples of
// (k-1)-simplices with entry i absent, calling the visitor with each
void for_each_horn(const TruncatedSSet& x, int k, int i,
                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> faces(k + 1, -1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos > k) {
            visit(faces);
            return;
        }
        if (pos == i) {
            rec(pos + 1);
            return;
        }
        for (int cand = 0; cand < x.counts[k - 1]; ++cand) {
            bool ok = true;
            for (int a = 0; a < pos && ok; ++a) {
                if (a == i || faces[a] < 0) continue;
                // d_a(y_pos) = d_{pos-1}(y_a) for a < pos
                if (x.face[k - 1][a][cand] != x.face[k - 1][pos - 1][faces[a]]) ok = false;
            }
            if (!ok) continue;
            faces[pos] = cand;
            rec(pos + 1);
            faces[pos] = -1;
        }
    };
    rec(0);
}

}  // namespace

HornReport is_quasicategory_upto(const TruncatedSSet& x, int max_k) {
    HornReport rep;
    for (int k = 2; k <= std::min(max_k, x.dim); ++k) {
        // index fillers by their face tuple with entry i dropped
        for (int i = 1; i < k; ++i) {
            std::map<std::vector<int>, int> filler_count;
            for (int z = 0; z < x.counts[k]; ++z) {
                std::vector<int> key;
                for (int j = 0; j <= k; ++j)
                    if (j != i) key.push_back(x.face[k][j][z]);
                ++filler_count[key];
            }
            for_each_horn(x, k, i, [&](const std::vector<int>& faces) {
                ++rep.horns;
                std::vector<int> key;
                for (int j = 0; j <= k; ++j)
                    if (j != i) key.push_back(faces[j]);
                auto it = filler_count.find(key);
                int cnt = it == filler_count.end() ? 0 : it->second;
                if (cnt == 0) {
                    rep.all_filled = false;
                    if (rep.unfilled.size() < 10) rep.unfilled.emplace_back(k, i, faces);
                }
                if (cnt != 1) rep.unique_fillers = false;
            });
        }
    }
    return rep;
}

void close_subcomplex(const TruncatedSSet& x, std::vector<std::vector<char>>& in) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 1; k <= x.dim; ++k)
            for (int s0 = 0; s0 < x.counts[k]; ++s0) {
                if (!in[k][s0]) continue;
                for (int i = 0; i <= k; ++i) {
                    int f0 = x.face[k][i][s0];
                    if (!in[k - 1][f0]) {
                        in[k - 1][f0] = 1;
                        changed = true;
                    }
                }
            }
        for (int k = 0; k < x.dim; ++k)
            for (int s0 = 0; s0 < x.counts[k]; ++s0) {
                if (!in[k][s0]) continue;
                for (int i = 0; i <= k; ++i) {
                    int d0 = x.degen[k][i][s0];
                    if (!in[k + 1][d0]) {
                        in[k + 1][d0] = 1;
                        changed = true;
                    }
                }
            }
    }
}

bool is_subcomplex(const TruncatedSSet& x, const std::vector<std::vector<char>>& in) {
    for (int k = 1; k <= x.dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            if (in[k][s0])
                for (int i = 0; i <= k; ++i)
                    if (!in[k - 1][x.face[k][i][s0]]) return false;
    for (int k = 0; k < x.dim; ++k)
        for (int s0 = 0; s0 < x.counts[k]; ++s0)
            if (in[k][s0])
                for (int i = 0; i <= k; ++i)
                    if (!in[k + 1][x.degen[k][i][s0]]) return false;
    return true;
}

std::vector<std::vector<char>> image_subcomplex(const SSetMap& f) {
    std::vector<std::vector<char>> in(f.cod.dim + 1);
    for (int k = 0; k <= f.cod.dim; ++k) {
        in[k].assign(f.cod.counts[k], 0);
        for (int v : f.level[k]) in[k][v] = 1;
    }
    return in;
}

AnodyneResult anodyne_search(const TruncatedSSet& x, std::vector<std::vector<char>> s0) {
    if (!is_subcomplex(x, s0)) throw std::invalid_argument("anodyne_search: s0 is not a subcomplex");
    AnodyneResult res;
    auto& in = s0;
    auto covered = [&]() {
        for (int k = 0; k <= x.dim - 1; ++k)
            for (int s1 = 0; s1 < x.counts[k]; ++s1)
                if (!in[k][s1]) return false;
        return true;
    };
    while (!covered()) {
        bool attached = false;
        for (int k = 2; k <= x.dim && !attached; ++k)
            for (int i = 1; i < k && !attached; ++i)
                for (int z = 0; z < x.counts[k] && !attached; ++z) {
                    if (in[k][z]) continue;
                    if (in[k - 1][x.face[k][i][z]]) continue;
                    bool horn_in = true;
                    for (int j = 0; j <= k && horn_in; ++j)
                        if (j != i && !in[k - 1][x.face[k][j][z]]) horn_in = false;
                    if (!horn_in) continue;
                    AttachStep st;
                    st.k = k;
                    st.i = i;
                    st.filler = z;
                    st.new_face = x.face[k][i][z];
                    st.horn_faces.assign(k + 1, -1);
                    for (int j = 0; j <= k; ++j)
                        if (j != i) st.horn_faces[j] = x.face[k][j][z];
                    in[k][z] = 1;
                    in[k - 1][st.new_face] = 1;
                    close_subcomplex(x, in);
                    res.steps.push_back(std::move(st));
                    attached = true;
                }
        if (!attached) break;
    }
    res.success = covered();
    if (!res.success)
        for (int k = 0; k <= x.dim - 1; ++k)
            for (int s1 = 0; s1 < x.counts[k]; ++s1)
                if (!in[k][s1]) res.unreached.emplace_back(k, s1);
    res.final_in = in;
    return res;
}

std::vector<std::vector<char>> replay_certificate(const TruncatedSSet& x,
                                                  std::vector<std::vector<char>> s0,
                                                  const std::vector<AttachStep>& steps) {
    if (!is_subcomplex(x, s0))
        throw std::runtime_error("replay: starting set is not a subcomplex");
    auto& in = s0;
    for (size_t n = 0; n < steps.size(); ++n) {
        const auto& st = steps[n];
        auto bad = [&](const std::string& why) {
            throw std::runtime_error("replay: step " + std::to_string(n) + ": " + why);
        };
        if (st.k < 2 || st.k > x.dim || st.i <= 0 || st.i >= st.k) bad("not an inner horn");
        if (st.filler < 0 || st.filler >= x.counts[st.k]) bad("filler out of range");
        if (in[st.k][st.filler]) bad("filler already present");
        if (x.face[st.k][st.i][st.filler] != st.new_face) bad("recorded face mismatch");
        if (in[st.k - 1][st.new_face]) bad("new face already present");
        for (int j = 0; j <= st.k; ++j) {
            if (j == st.i) continue;
            if (st.horn_faces[j] != x.face[st.k][j][st.filler]) bad("horn face mismatch");
            if (!in[st.k - 1][st.horn_faces[j]]) bad("horn not contained in subcomplex");
        }
        in[st.k][st.filler] = 1;
        in[st.k - 1][st.new_face] = 1;
        close_subcomplex(x, in);
    }
    return in;
}

}  // namespace fincat
