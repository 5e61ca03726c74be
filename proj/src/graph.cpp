#include "antimagic/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace antimagic {

char family_letter(VertexFamily f) {
    switch (f) {
        case VertexFamily::A: return 'a';
        case VertexFamily::B: return 'b';
        case VertexFamily::V: return 'v';
        case VertexFamily::U: return 'u';
    }
    return '?';
}

std::string VertexRole::to_string() const {
    std::string out(1, family_letter(family));
    out += "_" + std::to_string(path_index);
    if (has_branch()) out += "^" + std::to_string(branch_index);
    return out;
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& endpoints) {
    return from_edges(vertex_count, endpoints,
                      std::vector<std::optional<VertexRole>>(
                          static_cast<size_t>(vertex_count)));
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& endpoints,
                        std::vector<std::optional<VertexRole>> roles) {
    if (vertex_count < 0)
        throw std::invalid_argument("graph: negative vertex count");
    if (roles.size() != static_cast<size_t>(vertex_count))
        throw std::invalid_argument("graph: role list size mismatch");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.roles_ = std::move(roles);
    g.incidence_.assign(static_cast<size_t>(vertex_count), {});
    g.edges_.reserve(endpoints.size());

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : endpoints) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("graph: loop at vertex " +
                                        std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge " +
                                        std::to_string(key.first) + "-" +
                                        std::to_string(key.second));
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({id, a, b});
        g.incidence_[static_cast<size_t>(a)].push_back(id);
        g.incidence_[static_cast<size_t>(b)].push_back(id);
    }
    return g;
}

bool Graph::has_roles() const {
    return std::any_of(roles_.begin(), roles_.end(),
                       [](const auto& r) { return r.has_value(); });
}

int Graph::find_edge(int a, int b) const {
    if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_) return -1;
    for (int e : incidence_[static_cast<size_t>(a)]) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    return -1;
}

std::vector<int> Graph::degree_multiset() const {
    std::vector<int> degs(static_cast<size_t>(vertex_count_));
    for (int v = 0; v < vertex_count_; ++v)
        degs[static_cast<size_t>(v)] = degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

ProductParams ProductParams::checked(int s, int n) {
    if (s < 1) throw std::invalid_argument("product params: s must be >= 1");
    if (n < 2) throw std::invalid_argument("product params: n must be >= 2");
    return ProductParams{s, n};
}

namespace {

// Vertex block offsets for the even layout (n = 2m+2):
//   a: (m+1)*s ids, b: (m+1)*s, v: m+1, u: m+1.
// Odd layout (n = 2m+1): a has i in 0..m, b in 1..m, v in 0..m-1, u in 0..m.
struct LayoutDims {
    int s, m;
    bool even;
    int a_count, b_count, v_count, u_count;
};

LayoutDims dims(const ProductParams& p) {
    LayoutDims d{};
    d.s = p.s;
    d.m = p.m();
    d.even = p.even_path();
    if (d.even) {
        d.a_count = (d.m + 1) * d.s;
        d.b_count = (d.m + 1) * d.s;
        d.v_count = d.m + 1;
        d.u_count = d.m + 1;
    } else {
        d.a_count = (d.m + 1) * d.s;
        d.b_count = d.m * d.s;
        d.v_count = d.m;
        d.u_count = d.m + 1;
    }
    return d;
}

} // namespace

int StarPathLayout::a_vertex(int i, int j) const {
    return i * params.s + (j - 1);
}

int StarPathLayout::b_vertex(int i, int j) const {
    LayoutDims d = dims(params);
    int base = d.a_count;
    int row = d.even ? i : i - 1;
    return base + row * params.s + (j - 1);
}

int StarPathLayout::v_vertex(int i) const {
    LayoutDims d = dims(params);
    return d.a_count + d.b_count + i;
}

int StarPathLayout::u_vertex(int i) const {
    LayoutDims d = dims(params);
    return d.a_count + d.b_count + d.v_count + i;
}

// Edge blocks, in order:
//   even: a_i^j v_i (i 0..m), b_i^j u_i (i 0..m),
//         a_i^j v_{i-1} (i 1..m), b_i^j u_{i-1} (i 1..m).
//   odd:  a_i^j v_i (i 0..m-1), a_i^j v_{i-1} (i 1..m),
//         b_i^j u_i (i 1..m), b_i^j u_{i-1} (i 1..m).
int StarPathLayout::edge_a_down(int i, int j) const {
    return i * params.s + (j - 1);
}

int StarPathLayout::edge_a_up(int i, int j) const {
    LayoutDims d = dims(params);
    int base = d.even ? 2 * (d.m + 1) * d.s : d.m * d.s;
    return base + (i - 1) * params.s + (j - 1);
}

int StarPathLayout::edge_b_down(int i, int j) const {
    LayoutDims d = dims(params);
    if (d.even) return (d.m + 1) * d.s + i * params.s + (j - 1);
    return 2 * d.m * d.s + (i - 1) * params.s + (j - 1);
}

int StarPathLayout::edge_b_up(int i, int j) const {
    LayoutDims d = dims(params);
    if (d.even) return 2 * (d.m + 1) * d.s + d.m * d.s + (i - 1) * params.s + (j - 1);
    return 3 * d.m * d.s + (i - 1) * params.s + (j - 1);
}

Graph make_star(int s) {
    if (s < 1) throw std::invalid_argument("make_star: s must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(s));
    for (int j = 1; j <= s; ++j) edges.emplace_back(0, j);
    return Graph::from_edges(s + 1, edges);
}

Graph make_path(int n) {
    if (n < 2) throw std::invalid_argument("make_path: n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph direct_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("direct_product: empty operand");
    const int hn = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges().size() * h.edges().size());
    for (const Edge& ge : g.edges()) {
        for (const Edge& he : h.edges()) {
            edges.emplace_back(ge.u * hn + he.u, ge.v * hn + he.v);
            edges.emplace_back(ge.u * hn + he.v, ge.v * hn + he.u);
        }
    }
    return Graph::from_edges(g.vertex_count() * hn, edges);
}

Graph product_star_path(const ProductParams& p) {
    ProductParams::checked(p.s, p.n);
    const StarPathLayout L(p);
    const LayoutDims d = dims(p);
    const int s = d.s, m = d.m;

    std::vector<std::optional<VertexRole>> roles(
        static_cast<size_t>(p.vertex_count()));
    auto set_role = [&](int id, VertexFamily f, int i, int j) {
        roles[static_cast<size_t>(id)] = VertexRole{f, i, j};
    };
    for (int i = 0; i <= m; ++i)
        for (int j = 1; j <= s; ++j)
            set_role(L.a_vertex(i, j), VertexFamily::A, i, j);
    if (d.even) {
        for (int i = 0; i <= m; ++i)
            for (int j = 1; j <= s; ++j)
                set_role(L.b_vertex(i, j), VertexFamily::B, i, j);
        for (int i = 0; i <= m; ++i) set_role(L.v_vertex(i), VertexFamily::V, i, 0);
        for (int i = 0; i <= m; ++i) set_role(L.u_vertex(i), VertexFamily::U, i, 0);
    } else {
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= s; ++j)
                set_role(L.b_vertex(i, j), VertexFamily::B, i, j);
        for (int i = 0; i < m; ++i) set_role(L.v_vertex(i), VertexFamily::V, i, 0);
        for (int i = 0; i <= m; ++i) set_role(L.u_vertex(i), VertexFamily::U, i, 0);
    }

    std::vector<std::pair<int, int>> edges(
        static_cast<size_t>(p.edge_count()));
    auto put = [&](int edge_id, int a, int b) {
        edges[static_cast<size_t>(edge_id)] = {a, b};
    };
    if (d.even) {
        for (int i = 0; i <= m; ++i)
            for (int j = 1; j <= s; ++j) {
                put(L.edge_a_down(i, j), L.a_vertex(i, j), L.v_vertex(i));
                put(L.edge_b_down(i, j), L.b_vertex(i, j), L.u_vertex(i));
            }
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= s; ++j) {
                put(L.edge_a_up(i, j), L.a_vertex(i, j), L.v_vertex(i - 1));
                put(L.edge_b_up(i, j), L.b_vertex(i, j), L.u_vertex(i - 1));
            }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= s; ++j)
                put(L.edge_a_down(i, j), L.a_vertex(i, j), L.v_vertex(i));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= s; ++j) {
                put(L.edge_a_up(i, j), L.a_vertex(i, j), L.v_vertex(i - 1));
                put(L.edge_b_down(i, j), L.b_vertex(i, j), L.u_vertex(i));
                put(L.edge_b_up(i, j), L.b_vertex(i, j), L.u_vertex(i - 1));
            }
    }
    return Graph::from_edges(p.vertex_count(), edges, std::move(roles));
}

std::vector<ComponentSplit> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int comp_count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] >= 0) continue;
        std::queue<int> q;
        q.push(start);
        comp[static_cast<size_t>(start)] = comp_count;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                const Edge& ed = g.edge(e);
                int w = ed.u == v ? ed.v : ed.u;
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = comp_count;
                    q.push(w);
                }
            }
        }
        ++comp_count;
    }

    // Components come out ordered by smallest original vertex id because
    // BFS seeds scan ids ascending.
    std::vector<ComponentSplit> out;
    out.reserve(static_cast<size_t>(comp_count));
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<size_t>(v)] == c) {
                local[static_cast<size_t>(v)] = static_cast<int>(ids.size());
                ids.push_back(v);
            }
        std::vector<std::optional<VertexRole>> roles;
        roles.reserve(ids.size());
        for (int v : ids) roles.push_back(g.role(v));
        std::vector<std::pair<int, int>> edges;
        for (const Edge& ed : g.edges())
            if (comp[static_cast<size_t>(ed.u)] == c)
                edges.emplace_back(local[static_cast<size_t>(ed.u)],
                                   local[static_cast<size_t>(ed.v)]);
        out.push_back({Graph::from_edges(static_cast<int>(ids.size()), edges,
                                         std::move(roles)),
                       std::move(ids)});
    }
    return out;
}

bool has_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] >= 0) continue;
        color[static_cast<size_t>(start)] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                const Edge& ed = g.edge(e);
                int w = ed.u == v ? ed.v : ed.u;
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] =
                        1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] ==
                           color[static_cast<size_t>(v)]) {
                    return true;
                }
            }
        }
    }
    return false;
}

namespace {

// Adjacency as bitmasks; canonical form search works on these.
struct Canon {
    int n;
    std::vector<std::uint32_t> adj;

    // Refine colors to the coarsest stable partition (1-WL). Color values
    // are ranks of (color, sorted neighbor colors) signatures, so they are
    // isomorphism-invariant.
    std::vector<int> refine(std::vector<int> col) const {
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sig(
                static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> nb;
                for (int w = 0; w < n; ++w)
                    if (adj[static_cast<size_t>(v)] & (1u << w))
                        nb.push_back(col[static_cast<size_t>(w)]);
                std::sort(nb.begin(), nb.end());
                nb.insert(nb.begin(), col[static_cast<size_t>(v)]);
                sig[static_cast<size_t>(v)] = {std::move(nb), v};
            }
            std::vector<std::vector<int>> keys;
            for (auto& [k, v] : sig) keys.push_back(k);
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            std::vector<int> next(static_cast<size_t>(n));
            bool changed = false;
            for (int v = 0; v < n; ++v) {
                int c = static_cast<int>(
                    std::lower_bound(keys.begin(), keys.end(),
                                     sig[static_cast<size_t>(v)].first) -
                    keys.begin());
                next[static_cast<size_t>(v)] = c;
                if (c != col[static_cast<size_t>(v)]) changed = true;
            }
            if (!changed) return next;
            col = std::move(next);
        }
    }

    std::string string_for(const std::vector<int>& order) const {
        std::string out;
        out.reserve(static_cast<size_t>(n * (n - 1) / 2));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int va = order[static_cast<size_t>(a)];
                int vb = order[static_cast<size_t>(b)];
                out.push_back(
                    (adj[static_cast<size_t>(va)] & (1u << vb)) ? '1' : '0');
            }
        return out;
    }

    // Smallest adjacency string over all discrete extensions of col.
    std::string search(std::vector<int> col) const {
        col = refine(col);

        // First non-singleton cell in color order.
        int target_color = -1;
        std::vector<int> cell;
        for (int c = 0;; ++c) {
            cell.clear();
            bool any = false;
            for (int v = 0; v < n; ++v)
                if (col[static_cast<size_t>(v)] == c) {
                    cell.push_back(v);
                    any = true;
                }
            if (!any) break;
            if (cell.size() > 1) {
                target_color = c;
                break;
            }
        }

        if (target_color < 0) {
            std::vector<int> order(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v)
                order[static_cast<size_t>(col[static_cast<size_t>(v)])] = v;
            return string_for(order);
        }

        // Vertices with identical neighborhoods (modulo each other) are
        // automorphic; individualizing either gives the same result.
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps) {
                std::uint32_t nv = adj[static_cast<size_t>(v)] & ~(1u << r);
                std::uint32_t nr = adj[static_cast<size_t>(r)] & ~(1u << v);
                if (nv == nr) {
                    dup = true;
                    break;
                }
            }
            if (!dup) reps.push_back(v);
        }

        std::string best;
        for (int v : reps) {
            std::vector<int> next = col;
            for (int w = 0; w < n; ++w)
                if (next[static_cast<size_t>(w)] > target_color)
                    ++next[static_cast<size_t>(w)];
            next[static_cast<size_t>(v)] = target_color;
            for (int w : cell)
                if (w != v) next[static_cast<size_t>(w)] = target_color + 1;
            std::string cand = search(std::move(next));
            if (best.empty() || cand < best) best = std::move(cand);
        }
        return best;
    }
};

} // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument(
            "canonical_form: supported only for |V| <= 20");
    Canon c{n, std::vector<std::uint32_t>(static_cast<size_t>(n), 0)};
    for (const Edge& e : g.edges()) {
        c.adj[static_cast<size_t>(e.u)] |= (1u << e.v);
        c.adj[static_cast<size_t>(e.v)] |= (1u << e.u);
    }
    std::string body =
        n == 0 ? std::string() : c.search(std::vector<int>(static_cast<size_t>(n), 0));
    return std::to_string(n) + ";" + std::to_string(g.edge_count()) + ";" + body;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return false;
    if (a.degree_multiset() != b.degree_multiset()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace antimagic
