#pragma once

// Static undirected simple graphs, neighborhood/ball queries, girth,
// acyclicity of induced subgraphs, the inward-directed variant used by the
// local-uniformity analysis, and seeded generators with girth constraints.

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "glauber/rng.hpp"

namespace glauber {

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// Sentinel for "no cycle": girth of a forest.
constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    // Builds from an edge list; rejects self-loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n()) throw InputError("vertex id out of range: " + std::to_string(v));
    }

private:
    std::vector<std::vector<int>> adj_;  // sorted, symmetric
};

struct DiGraph {
    int n = 0;
    std::vector<std::vector<int>> out_adj;
    std::vector<std::vector<int>> in_adj;
};

using VertexSet = std::vector<int>;  // sorted vertex ids

// B_r(seeds): vertices at hop distance <= r from some seed.
VertexSet ball(const Graph& g, const VertexSet& seeds, int r);
// S_r(seeds) = B_r \ B_{r-1}; r = 0 gives the seeds themselves.
VertexSet sphere(const Graph& g, const VertexSet& seeds, int r);
// N^r(seeds) = B_r \ seeds.
VertexSet neighborhood_r(const Graph& g, const VertexSet& seeds, int r);

std::vector<int> bfs_distances(const Graph& g, int source, int cap = std::numeric_limits<int>::max());

// Length of the shortest cycle; kInfiniteGirth for forests.  BFS from every
// vertex, O(n m); fine at desk scale.
int girth(const Graph& g);

// True iff the subgraph induced on s is a forest.
bool induced_is_acyclic(const Graph& g, const VertexSet& s);

// True iff G[s] is acyclic AND no three extra vertices close a cycle with s,
// i.e. G[s + {v1,v2,v3}] is acyclic for every triple.  Checked as: G[s] is a
// forest and no two vertices of s are joined by a path of length <= 4 whose
// interior avoids s.  (For the bounding chain s is connected, which makes the
// two formulations equivalent.)
bool induced_plus_three_acyclic(const Graph& g, const VertexSet& s);

// Directed graph for the local-uniformity argument: edges inside B_3(v) at
// unequal distance from v point toward v; every other edge is kept in both
// directions.  Equivalently, delete all edges of directed paths of length 3
// starting at v.
DiGraph build_g_in(const Graph& g, int v);

// ---------------------------------------------------------------------------
// Generators.  Deterministic given (spec, seed): same inputs give
// byte-identical adjacency lists.

struct GenSpec {
    std::string kind;  // cycle | path | star | random_tree | random_regular_girth |
                       // regular_tree | gq_incidence | from_edge_list
    int n = 0;
    int degree = 0;     // target/max degree where applicable
    int girth_min = 0;  // required girth for random_regular_girth
    int depth = 0;      // regular_tree
    std::string path;   // from_edge_list
};

// Parses e.g. "cycle:12", "random_regular_girth:3000,12,7", "file:g.edges".
GenSpec parse_gen_spec(const std::string& text);

Graph gen_graph(const GenSpec& spec, std::uint64_t seed);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_star(int leaves);
Graph gen_random_tree(int n, std::uint64_t seed, int max_degree = 0);
// Root has `deg` children, every other internal vertex deg-1 children, leaves
// at distance `depth` from the root: every internal vertex has degree `deg`.
Graph gen_regular_tree(int deg, int depth);
// Incidence graph of the symplectic generalized quadrangle W(q), q prime:
// bipartite, (q+1)-regular on 2(q^3+q^2+q+1) vertices, girth 8.  Vertex ids
// are randomly relabeled from `seed`.
Graph gen_gq_incidence(int q, std::uint64_t seed);
// Degree-`deg` graph of girth >= girth_min when attainable at size n
// (pairing model plus cycle-breaking edge switches, 1e4 retry budget).  When
// a regular graph of that girth cannot exist at size n, falls back to the
// closest structured or greedy max-degree-`deg` construction; the achieved
// girth and regularity are up to the caller to inspect.
Graph gen_random_regular_girth(int n, int deg, int girth_min, std::uint64_t seed);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list_file(const std::string& path);

// Moore bound: minimum order of a deg-regular graph of the given girth.
long long moore_bound(int deg, int girth);

}  // namespace glauber
