// Graph core: immutable simple graphs, star/path constructors, the direct
// product operator, role-tagged star-path products, connectivity analysis
// and a small-graph canonical form.

#ifndef ANTIMAGIC_GRAPH_HPP
#define ANTIMAGIC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

enum class VertexFamily : std::uint8_t { A, B, V, U };

char family_letter(VertexFamily f);

// Semantic address of a vertex in a star-path product: family letter,
// path index i, and (for the a/b families) branch index j in 1..s.
struct VertexRole {
    VertexFamily family;
    int path_index = 0;   // i
    int branch_index = 0; // j; 0 for families v and u

    bool has_branch() const {
        return family == VertexFamily::A || family == VertexFamily::B;
    }
    std::string to_string() const;

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct Edge {
    int id;
    int u;
    int v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph. Vertex ids are 0..|V|-1, edge ids
// 0..|E|-1, both contiguous. Construction validates simplicity (no loops,
// no duplicate endpoint pairs) and endpoint ranges.
class Graph {
public:
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& endpoints);
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& endpoints,
                            std::vector<std::optional<VertexRole>> roles);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    // Edge ids incident to v.
    std::span<const int> incident_edges(int v) const {
        return incidence_[static_cast<size_t>(v)];
    }
    int degree(int v) const {
        return static_cast<int>(incidence_[static_cast<size_t>(v)].size());
    }
    const std::optional<VertexRole>& role(int v) const {
        return roles_[static_cast<size_t>(v)];
    }
    bool has_roles() const;

    // Edge id joining a and b, or -1 when not adjacent.
    int find_edge(int a, int b) const;
    bool adjacent(int a, int b) const { return find_edge(a, b) >= 0; }

    // Degrees sorted ascending.
    std::vector<int> degree_multiset() const;

private:
    Graph() = default;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::optional<VertexRole>> roles_;
    std::vector<std::vector<int>> incidence_;
};

// Parameters of the product K_{1,s} x P_n. m is the half-length index:
// n = 2m+2 when n is even, n = 2m+1 when n is odd.
struct ProductParams {
    int s = 1;
    int n = 2;

    static ProductParams checked(int s, int n);

    bool even_path() const { return n % 2 == 0; }
    int m() const { return even_path() ? (n - 2) / 2 : (n - 1) / 2; }
    int edge_count() const { return 2 * s * (n - 1); }
    int vertex_count() const { return (s + 1) * n; }

    friend bool operator==(const ProductParams&, const ProductParams&) = default;
};

// Deterministic vertex/edge id layout of product_star_path. Roles are
// enumerated a (i ascending, j ascending), then b, v, u; edges follow the
// incidence families in a fixed order. Label constructors rely on this
// layout to address edges without searching.
struct StarPathLayout {
    ProductParams params;

    explicit StarPathLayout(const ProductParams& p) : params(p) {}

    int a_vertex(int i, int j) const;
    int b_vertex(int i, int j) const;
    int v_vertex(int i) const;
    int u_vertex(int i) const;

    // Edge a_i^j v_i. Even path: i in 0..m. Odd path: i in 0..m-1.
    int edge_a_down(int i, int j) const;
    // Edge a_i^j v_{i-1}, i in 1..m.
    int edge_a_up(int i, int j) const;
    // Edge b_i^j u_i. Even path: i in 0..m. Odd path: i in 1..m.
    int edge_b_down(int i, int j) const;
    // Edge b_i^j u_{i-1}, i in 1..m.
    int edge_b_up(int i, int j) const;
};

Graph make_star(int s);
Graph make_path(int n);

// Direct (tensor/Kronecker) product: vertices are pairs (x,y) with
// id = x*|V(h)| + y; (x,y)~(x',y') iff x~x' in g and y~y' in h.
Graph direct_product(const Graph& g, const Graph& h);

// The product K_{1,s} x P_n with every vertex carrying its VertexRole,
// built directly from the role scheme. Isomorphic to
// direct_product(make_star(s), make_path(n)).
Graph product_star_path(const ProductParams& p);

struct ComponentSplit {
    Graph graph;                   // induced component, ids remapped to 0..k-1
    std::vector<int> original_ids; // component id -> id in the parent graph
};

// Connected components ordered by smallest original vertex id.
std::vector<ComponentSplit> components(const Graph& g);

// True iff g is non-bipartite.
bool has_odd_cycle(const Graph& g);

// Canonical form for small graphs (|V| <= 20): a string equal for exactly
// the isomorphic graphs. Individualization-refinement with twin pruning.
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace antimagic

#endif
