#include "antimagic/search.hpp"
#include "antimagic/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace antimagic {

std::string graph_fingerprint(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) pairs.push_back(std::minmax(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    std::string out = std::to_string(g.vertex_count()) + ";" +
                      std::to_string(g.edge_count()) + ";";
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(pairs[k].first) + "-" +
               std::to_string(pairs[k].second);
    }
    return out;
}

namespace {

struct SearchState {
    const Graph& g;
    std::int64_t max_nodes;

    std::vector<char> assigned;           // by edge id
    std::vector<std::int64_t> assignment; // by edge id; 0 = unassigned
    std::vector<std::int64_t> weight;     // partial weight by vertex
    std::vector<int> remaining;      // unlabeled incident edges by vertex
    std::vector<char> occupied;      // finalized-weight table
    std::uint64_t used_labels = 0;

    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    bool budget_hit = false;
    bool witness_found = false;

    explicit SearchState(const Graph& graph, std::int64_t cap)
        : g(graph), max_nodes(cap) {
        const int e = g.edge_count();
        assigned.assign(static_cast<size_t>(e), 0);
        assignment.assign(static_cast<size_t>(e), 0);
        weight.assign(static_cast<size_t>(g.vertex_count()), 0);
        remaining.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            remaining[static_cast<size_t>(v)] = g.degree(v);
        occupied.assign(static_cast<size_t>(e) * (static_cast<size_t>(e) + 1) / 2 + 1, 0);
    }

    // Fail-first: the unassigned edge whose endpoints have the fewest
    // unlabeled incident edges, ties to the lowest id. Finalizes vertices
    // as early as possible, so weight collisions surface within a step or
    // two of being created. The choice depends only on which edges are
    // assigned, never on their labels, so every complete assignment still
    // corresponds to exactly one leaf of the tree.
    int pick_edge() const {
        int best = -1, best_score = 0;
        for (const Edge& ed : g.edges()) {
            if (assigned[static_cast<size_t>(ed.id)]) continue;
            int score = remaining[static_cast<size_t>(ed.u)] +
                        remaining[static_cast<size_t>(ed.v)];
            if (best < 0 || score < best_score) {
                best = ed.id;
                best_score = score;
            }
        }
        return best;
    }

    // Isolated vertices are finalized at weight 0 before the search; two of
    // them already force a collision.
    bool seed_isolated() {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (remaining[static_cast<size_t>(v)] != 0) continue;
            if (occupied[0]) return false;
            occupied[0] = 1;
        }
        return true;
    }

    // Returns true when a witness was found below this node.
    bool dfs(int depth) {
        const int e = g.edge_count();
        if (depth == e) {
            ++leaves;
            witness_found = true;
            return true;
        }
        const Edge& ed = g.edge(pick_edge());
        assigned[static_cast<size_t>(ed.id)] = 1;
        for (int label = 1; label <= e; ++label) {
            if (used_labels & (1ull << label)) continue;
            if (nodes >= max_nodes) {
                budget_hit = true;
                break;
            }
            ++nodes;

            assignment[static_cast<size_t>(ed.id)] = label;
            used_labels |= (1ull << label);
            weight[static_cast<size_t>(ed.u)] += label;
            weight[static_cast<size_t>(ed.v)] += label;
            --remaining[static_cast<size_t>(ed.u)];
            --remaining[static_cast<size_t>(ed.v)];

            bool collision = false;
            std::int64_t marked[2];
            int marked_count = 0;
            for (int w : {ed.u, ed.v}) {
                if (remaining[static_cast<size_t>(w)] != 0) continue;
                std::int64_t fw = weight[static_cast<size_t>(w)];
                if (occupied[static_cast<size_t>(fw)]) {
                    collision = true;
                    break;
                }
                occupied[static_cast<size_t>(fw)] = 1;
                marked[marked_count++] = fw;
            }

            if (collision) {
                ++leaves;
            } else if (dfs(depth + 1)) {
                return true; // witness in `assignment`; no undo on the way out
            }

            for (int k = 0; k < marked_count; ++k)
                occupied[static_cast<size_t>(marked[k])] = 0;
            ++remaining[static_cast<size_t>(ed.u)];
            ++remaining[static_cast<size_t>(ed.v)];
            weight[static_cast<size_t>(ed.u)] -= label;
            weight[static_cast<size_t>(ed.v)] -= label;
            used_labels &= ~(1ull << label);
            assignment[static_cast<size_t>(ed.id)] = 0;

            if (budget_hit) break;
        }
        assigned[static_cast<size_t>(ed.id)] = 0;
        return false;
    }
};

} // namespace

SearchResult find_antimagic(const Graph& g, const SearchBudget& b) {
    const int e = g.edge_count();
    if (e < 1)
        throw std::invalid_argument("find_antimagic: graph has no edges");
    if (b.mode == SearchBudget::Mode::Exhaustive && e > 12)
        throw std::invalid_argument(
            "find_antimagic: exhaustive mode requires |E| <= 12");
    if (e > 62)
        throw std::invalid_argument("find_antimagic: |E| > 62 unsupported");

    SearchState st(g, b.max_nodes);
    SearchResult result{};
    if (!st.seed_isolated()) {
        // Two isolated vertices tie at weight 0 under every assignment.
        result.kind = SearchResult::Kind::NotAntimagic;
        result.certificate =
            NonAntimagicCertificate{graph_fingerprint(g), 0, true};
        return result;
    }

    st.dfs(0);
    result.report = {st.nodes, st.leaves, st.budget_hit};
    if (st.witness_found) {
        result.kind = SearchResult::Kind::Antimagic;
        result.witness = EdgeLabeling{st.assignment};
    } else if (st.budget_hit) {
        result.kind = SearchResult::Kind::Unknown;
    } else {
        result.kind = SearchResult::Kind::NotAntimagic;
        result.certificate = NonAntimagicCertificate{graph_fingerprint(g),
                                                     st.leaves, true};
    }
    return result;
}

CrossValidationReport cross_validate(const ProductParams& p,
                                     const SearchBudget& b) {
    const Graph g = product_star_path(p);
    if (b.mode == SearchBudget::Mode::Exhaustive && g.edge_count() > 12)
        throw std::invalid_argument(
            "cross_validate: exhaustive mode requires 2s(n-1) <= 12");

    const ConstructionOutcome c = construct(p, b);
    const SearchResult s = find_antimagic(g, b);

    auto kind_of = [](ConstructionOutcome::Kind k) {
        switch (k) {
            case ConstructionOutcome::Kind::Antimagic:
                return SearchResult::Kind::Antimagic;
            case ConstructionOutcome::Kind::NotAntimagic:
                return SearchResult::Kind::NotAntimagic;
            case ConstructionOutcome::Kind::Unknown:
                return SearchResult::Kind::Unknown;
        }
        return SearchResult::Kind::Unknown;
    };

    CrossValidationReport report;
    report.params = p;
    report.construct_kind = kind_of(c.kind);
    report.search_kind = s.kind;
    report.agree = report.construct_kind == report.search_kind;

    const bool one_sided_proof =
        report.construct_kind != SearchResult::Kind::Unknown &&
        report.search_kind != SearchResult::Kind::Unknown;
    if (!report.agree && one_sided_proof)
        throw std::runtime_error(
            "cross_validate: dispatcher and search disagree at s=" +
            std::to_string(p.s) + " n=" + std::to_string(p.n));
    return report;
}

} // namespace antimagic
