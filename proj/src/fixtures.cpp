#include "fincat/fixtures.hpp"

#include <map>
#include <set>

namespace fincat {

FinCategory terminal_cat() {
    CategoryBuilder b("one");
    b.add_object("pt");
    return b.build();
}

FinCategory walking_arrow() {
    CategoryBuilder b("two");
    int x0 = b.add_object("d0");
    int x1 = b.add_object("d1");
    b.add_morphism("a", x0, x1);
    return b.build();
}

FinCategory walking_iso() {
    CategoryBuilder b("iso");
    int x0 = b.add_object("d0");
    int x1 = b.add_object("d1");
    int f = b.add_morphism("f", x0, x1);
    int g = b.add_morphism("g", x1, x0);
    b.set_compose(g, f, b.identity(x0));
    b.set_compose(f, g, b.identity(x1));
    return b.build();
}

FinCategory poset_chain(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    FinCategory c = poset_from_edges(n + 1, edges);
    c.name = "chain" + std::to_string(n);
    return c;
}

FinCategory discrete_cat(int n) {
    CategoryBuilder b("disc" + std::to_string(n));
    for (int i = 0; i < n; ++i) b.add_object();
    return b.build();
}

FinCategory cospan_cat() {
    CategoryBuilder b("cospan");
    int l = b.add_object("l");
    int m = b.add_object("m");
    int r = b.add_object("r");
    b.add_morphism("lm", l, m);
    b.add_morphism("rm", r, m);
    return b.build();
}

FinCategory span_cat() {
    FinCategory c = opposite(cospan_cat());
    c.name = "span";
    return c;
}

FinCategory monoid5() {
    CategoryBuilder b("M5");
    int o = b.add_object("o");
    int x[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            x[i][j] = b.add_morphism("x" + std::to_string(i + 1) + std::to_string(j + 1), o, o);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) b.set_compose(x[i][j], x[k][l], x[i][l]);
    return b.build();
}

FinCategory cone(const FinCategory& c) {
    FinCategory d;
    d.name = c.name + "_cone";
    d.obj_names = c.obj_names;
    d.obj_names.push_back("top");
    const int top = c.num_objects();
    const int m0 = c.num_morphisms();
    const int m = m0 + c.num_objects() + 1;  // one arrow x -> top per x, plus 1_top
    if (m > morphism_guard()) throw guard_error("cone exceeds morphism guard");
    d.mor_names = c.mor_names;
    d.mor_src = c.mor_src;
    d.mor_tgt = c.mor_tgt;
    d.id_of = c.id_of;
    for (int x = 0; x < c.num_objects(); ++x) {
        d.mor_names.push_back("to_top_" + c.obj_names[x]);
        d.mor_src.push_back(x);
        d.mor_tgt.push_back(top);
    }
    d.mor_names.push_back("1_top");
    d.mor_src.push_back(top);
    d.mor_tgt.push_back(top);
    d.id_of.push_back(m - 1);
    d.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int g = 0; g < m0; ++g)
        for (int f = 0; f < m0; ++f) d.comp[static_cast<size_t>(g) * m + f] = c.compose(g, f);
    for (int f = 0; f < m0; ++f) {
        // (src f -> top) . f stays the cone arrow at src(f)... composing the
        // cone arrow after f gives the cone arrow at src(f)
        d.comp[static_cast<size_t>(m0 + c.tgt(f)) * m + f] = m0 + c.src(f);
    }
    for (int x = 0; x < c.num_objects(); ++x) {
        d.comp[static_cast<size_t>(m - 1) * m + (m0 + x)] = m0 + x;  // 1_top . cone_x
        d.comp[static_cast<size_t>(m0 + x) * m + c.identity(x)] = m0 + x;
    }
    d.comp[static_cast<size_t>(m - 1) * m + (m - 1)] = m - 1;
    return d;
}

FinCategory poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<std::string>& names) {
    // reflexive-transitive closure
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) le[i][i] = 1;
    for (auto [a, b] : edges) le[a][b] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && le[i][j] && le[j][i])
                throw std::logic_error("poset_from_edges: relation is not antisymmetric");

    FinCategory c;
    c.name = "poset";
    for (int i = 0; i < n; ++i)
        c.obj_names.push_back(names.empty() ? "p" + std::to_string(i) : names[i]);
    std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        arrow[i][i] = c.num_morphisms();
        c.mor_names.push_back("1_" + c.obj_names[i]);
        c.mor_src.push_back(i);
        c.mor_tgt.push_back(i);
        c.id_of.push_back(arrow[i][i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && le[i][j]) {
                arrow[i][j] = c.num_morphisms();
                c.mor_names.push_back(c.obj_names[i] + "_le_" + c.obj_names[j]);
                c.mor_src.push_back(i);
                c.mor_tgt.push_back(j);
            }
    const int m = c.num_morphisms();
    c.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f)
            if (c.composable(g, f))
                c.comp[static_cast<size_t>(g) * m + f] = arrow[c.src(f)][c.tgt(g)];
    return c;
}

FinCategory free_on_dag(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::string>& edge_names) {
    // enumerate all directed paths; acyclicity keeps this finite
    FinCategory c;
    c.name = "free";
    for (int i = 0; i < n; ++i) c.obj_names.push_back("v" + std::to_string(i));
    std::map<std::vector<int>, int> path_id;  // edge index sequence -> morphism
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<int, int>> ends;
    auto add_path = [&](const std::vector<int>& p, int s, int t) {
        int id = static_cast<int>(paths.size());
        path_id[p] = id;
        paths.push_back(p);
        ends.emplace_back(s, t);
        return id;
    };
    for (int i = 0; i < n; ++i) {
        add_path({-1 - i}, i, i);  // identity marker
        c.mor_names.push_back("1_" + c.obj_names[i]);
        c.id_of.push_back(i);
    }
    auto edge_name = [&](int e) {
        return edge_names.empty() ? "e" + std::to_string(e) : edge_names[e];
    };
    // BFS over path length
    size_t head = 0;
    std::vector<std::vector<int>> nontrivial;  // queue of edge sequences
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        add_path({e}, edges[e].first, edges[e].second);
        c.mor_names.push_back(edge_name(e));
        nontrivial.push_back({e});
    }
    while (head < nontrivial.size()) {
        auto p = nontrivial[head++];
        int tail = edges[p.back()].second;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            if (edges[e].first != tail) continue;
            auto q = p;
            q.push_back(e);
            if (path_id.size() > static_cast<size_t>(morphism_guard()))
                throw guard_error("free_on_dag exceeds morphism guard (cyclic graph?)");
            if (path_id.size() > 100000) throw guard_error("free_on_dag runaway");
            add_path(q, edges[p.front()].first, edges[e].second);
            std::string nm = edge_name(q[0]);
            for (size_t i = 1; i < q.size(); ++i) nm = edge_name(q[i]) + "." + nm;
            c.mor_names.push_back(nm);
            nontrivial.push_back(q);
        }
    }
    const int m = static_cast<int>(paths.size());
    if (m > morphism_guard()) throw guard_error("free_on_dag exceeds morphism guard");
    c.mor_src.resize(m);
    c.mor_tgt.resize(m);
    for (int k = 0; k < m; ++k) {
        c.mor_src[k] = ends[k].first;
        c.mor_tgt[k] = ends[k].second;
    }
    c.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            if (!c.composable(g, f)) continue;
            if (g < n)
                c.comp[static_cast<size_t>(g) * m + f] = f;
            else if (f < n)
                c.comp[static_cast<size_t>(g) * m + f] = g;
            else {
                auto q = paths[f];
                q.insert(q.end(), paths[g].begin(), paths[g].end());
                c.comp[static_cast<size_t>(g) * m + f] = path_id.at(q);
            }
        }
    return c;
}

FinCategory sphere_poset_ambient() {
    // objects: T L R P Q S under a top element M; the first six form a
    // hexagonal zigzag T->L, T->R, P->L, P->Q, S->R, S->Q whose nerve is a
    // circle; every object sits below M.
    std::vector<std::string> names = {"T", "L", "R", "P", "Q", "S", "M"};
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {3, 1}, {3, 4}, {5, 2}, {5, 4}, {0, 6}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
    FinCategory c = poset_from_edges(7, edges, names);
    c.name = "sphere_poset";
    return c;
}

std::vector<int> sphere_poset_sieve() { return {0, 1, 2, 3, 4, 5}; }

Functor pick_object(const FinCategory& c, int obj, const std::string& name) {
    Functor f;
    f.name = name;
    f.dom = terminal_cat();
    f.cod = c;
    f.obj_map = {obj};
    f.mor_map = {c.identity(obj)};
    return f;
}

Functor collapse_to_point(const FinCategory& c) {
    Functor f;
    f.name = "!";
    f.dom = c;
    f.cod = terminal_cat();
    f.obj_map.assign(c.num_objects(), 0);
    f.mor_map.assign(c.num_morphisms(), 0);
    return f;
}

}  // namespace fincat
