#include "glauber/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace glauber {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw InputError("duplicate edge in input");
    }
    return g;
}

int Graph::m() const {
    long long s = 0;
    for (const auto& row : adj_) s += static_cast<long long>(row.size());
    return static_cast<int>(s / 2);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

VertexSet ball(const Graph& g, const VertexSet& seeds, int r) {
    if (r < 0) throw InputError("ball radius must be >= 0");
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q;
    for (int s : seeds) {
        g.check_vertex(s);
        if (dist[s] < 0) {
            dist[s] = 0;
            q.push_back(s);
        }
    }
    VertexSet out;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        out.push_back(u);
        if (dist[u] == r) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet sphere(const Graph& g, const VertexSet& seeds, int r) {
    VertexSet br = ball(g, seeds, r);
    if (r == 0) return br;
    VertexSet inner = ball(g, seeds, r - 1);
    VertexSet out;
    std::set_difference(br.begin(), br.end(), inner.begin(), inner.end(), std::back_inserter(out));
    return out;
}

VertexSet neighborhood_r(const Graph& g, const VertexSet& seeds, int r) {
    VertexSet br = ball(g, seeds, r);
    VertexSet sorted_seeds = seeds;
    std::sort(sorted_seeds.begin(), sorted_seeds.end());
    VertexSet out;
    std::set_difference(br.begin(), br.end(), sorted_seeds.begin(), sorted_seeds.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source, int cap) {
    g.check_vertex(source);
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q;
    dist[source] = 0;
    q.push_back(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (dist[u] >= cap) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

int girth(const Graph& g) {
    // Shortest cycle through each root via BFS; a non-tree edge seen from
    // root s at levels (du, dw) witnesses a cycle of length du+dw+1.
    int best = kInfiniteGirth;
    std::vector<int> dist(g.n());
    std::vector<int> parent(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q;
        dist[s] = 0;
        parent[s] = -1;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

bool induced_is_acyclic(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) {
        g.check_vertex(v);
        in_s[v] = 1;
    }
    // Edge count vs vertex count per connected component of G[s].
    std::vector<char> seen(g.n(), 0);
    for (int root : s) {
        if (seen[root]) continue;
        long long verts = 0, deg_sum = 0;
        std::deque<int> q{root};
        seen[root] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            ++verts;
            for (int w : g.neighbors(u)) {
                if (!in_s[w]) continue;
                ++deg_sum;
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        }
        if (deg_sum / 2 >= verts) return false;
    }
    return true;
}

bool induced_plus_three_acyclic(const Graph& g, const VertexSet& s) {
    if (!induced_is_acyclic(g, s)) return false;
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    // Look for a path of length 2..4 between two s-vertices whose interior
    // avoids s.  (Length-1 paths are edges of G[s], already handled above.)
    std::vector<int> dist(g.n(), -1);
    std::vector<int> touched;
    for (int v : s) {
        std::deque<int> q{v};
        dist[v] = 0;
        touched.push_back(v);
        bool bad = false;
        while (!q.empty() && !bad) {
            int u = q.front();
            q.pop_front();
            if (dist[u] >= 4) continue;
            for (int w : g.neighbors(u)) {
                if (in_s[w]) {
                    if (u != v && dist[u] + 1 <= 4) {  // interior vertex exists
                        bad = true;
                        break;
                    }
                    continue;
                }
                if (dist[w] < 0 && dist[u] + 1 < 4) {
                    dist[w] = dist[u] + 1;
                    touched.push_back(w);
                    q.push_back(w);
                } else if (dist[w] < 0 && dist[u] + 1 == 4) {
                    dist[w] = 4;  // frontier; only s-hits matter beyond here
                    touched.push_back(w);
                }
            }
        }
        for (int u : touched) dist[u] = -1;
        touched.clear();
        if (bad) return false;
    }
    return true;
}

DiGraph build_g_in(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<int> dist = bfs_distances(g, v, 3);
    DiGraph d;
    d.n = g.n();
    d.out_adj.assign(g.n(), {});
    d.in_adj.assign(g.n(), {});
    auto add = [&](int from, int to) {
        d.out_adj[from].push_back(to);
        d.in_adj[to].push_back(from);
    };
    for (int u = 0; u < g.n(); ++u) {
        for (int w : g.neighbors(u)) {
            if (w < u) continue;
            bool u_in = dist[u] >= 0 && dist[u] <= 3;
            bool w_in = dist[w] >= 0 && dist[w] <= 3;
            if (u_in && w_in && dist[u] != dist[w]) {
                if (dist[u] > dist[w])
                    add(u, w);
                else
                    add(w, u);
            } else {
                add(u, w);
                add(w, u);
            }
        }
    }
    for (auto& row : d.out_adj) std::sort(row.begin(), row.end());
    for (auto& row : d.in_adj) std::sort(row.begin(), row.end());
    return d;
}

// ---------------------------------------------------------------------------

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph gen_path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph gen_star(int leaves) {
    if (leaves < 1) throw InputError("star needs >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph gen_random_tree(int n, std::uint64_t seed, int max_degree) {
    if (n < 1) throw InputError("tree needs n >= 1");
    Rng rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        int u;
        int guard = 0;
        do {
            u = static_cast<int>(rng.uniform_below(v));
            if (++guard > 64 * v) throw GenerationError("random_tree: degree cap too tight");
        } while (max_degree > 0 && deg[u] >= max_degree);
        e.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    return Graph::from_edges(n, e);
}

Graph gen_regular_tree(int deg, int depth) {
    if (deg < 2 || depth < 1) throw InputError("regular_tree needs deg >= 2, depth >= 1");
    std::vector<std::pair<int, int>> e;
    std::vector<int> frontier{0};
    int next_id = 1;
    for (int level = 0; level < depth; ++level) {
        std::vector<int> next_frontier;
        for (int u : frontier) {
            int children = (level == 0) ? deg : deg - 1;
            for (int c = 0; c < children; ++c) {
                e.emplace_back(u, next_id);
                next_frontier.push_back(next_id);
                ++next_id;
            }
        }
        frontier = std::move(next_frontier);
    }
    return Graph::from_edges(next_id, e);
}

namespace {

// Arithmetic in F_q and normalized points of PG(3,q).
struct Pg3 {
    int q;
    std::vector<std::array<int, 4>> points;
    // Index lookup per normalized point.
    int index_of(std::array<int, 4> p) const {
        auto it = std::lower_bound(points.begin(), points.end(), p);
        return static_cast<int>(it - points.begin());
    }
};

Pg3 make_pg3(int q) {
    Pg3 pg;
    pg.q = q;
    // Normalized representatives: first nonzero coordinate equals 1.
    for (int lead = 0; lead < 4; ++lead) {
        std::array<int, 4> p{0, 0, 0, 0};
        p[lead] = 1;
        int free = 3 - lead;
        int total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        for (int code = 0; code < total; ++code) {
            int c = code;
            for (int i = lead + 1; i < 4; ++i) {
                p[i] = c % q;
                c /= q;
            }
            pg.points.push_back(p);
        }
    }
    std::sort(pg.points.begin(), pg.points.end());
    return pg;
}

std::array<int, 4> normalize(std::array<int, 4> p, int q) {
    int lead = -1;
    for (int i = 0; i < 4; ++i)
        if (p[i] != 0) {
            lead = i;
            break;
        }
    // Multiply by inverse of leading coordinate (q prime).
    int a = p[lead], inv = 1;
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) inv = inv * a % q;
        a = a * a % q;
    }
    for (int i = 0; i < 4; ++i) p[i] = p[i] * inv % q;
    return p;
}

int symplectic_form(const std::array<int, 4>& x, const std::array<int, 4>& y, int q) {
    long long b = static_cast<long long>(x[0]) * y[1] - static_cast<long long>(x[1]) * y[0] +
                  static_cast<long long>(x[2]) * y[3] - static_cast<long long>(x[3]) * y[2];
    return static_cast<int>(((b % q) + q) % q);
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Graph gen_gq_incidence(int q, std::uint64_t seed) {
    if (!is_prime(q)) throw InputError("gq_incidence currently supports prime q only");
    Pg3 pg = make_pg3(q);
    const int npoints = static_cast<int>(pg.points.size());  // q^3+q^2+q+1

    // Totally isotropic lines of W(q): spans {x + m y, y} over collinear
    // isotropic pairs, deduplicated by their sorted point-index tuple.
    std::vector<std::vector<int>> lines;
    std::vector<char> seen_key;  // keyed by smallest two point ids
    std::vector<std::vector<int>> by_min(npoints);
    for (int i = 0; i < npoints; ++i) {
        for (int j = i + 1; j < npoints; ++j) {
            if (symplectic_form(pg.points[i], pg.points[j], q) != 0) continue;
            // Build the q+1 points of span{p_i, p_j}.
            std::vector<int> line;
            line.push_back(i);
            line.push_back(j);
            for (int m = 1; m < q; ++m) {
                std::array<int, 4> p;
                for (int c = 0; c < 4; ++c) p[c] = (pg.points[i][c] + m * pg.points[j][c]) % q;
                line.push_back(pg.index_of(normalize(p, q)));
            }
            std::sort(line.begin(), line.end());
            if (line[0] != i || line[1] != j) continue;  // not the canonical pair
            by_min[i].push_back(static_cast<int>(lines.size()));
            lines.push_back(std::move(line));
        }
    }
    const int nlines = static_cast<int>(lines.size());
    if (nlines != npoints) throw GenerationError("gq_incidence: unexpected line count");

    // Incidence graph; seeded relabeling of all 2*npoints vertices.
    int total = npoints + nlines;
    std::vector<int> relabel(total);
    std::iota(relabel.begin(), relabel.end(), 0);
    Rng rng(seed);
    rng.shuffle(relabel);
    std::vector<std::pair<int, int>> e;
    for (int li = 0; li < nlines; ++li)
        for (int p : lines[li]) e.emplace_back(relabel[p], relabel[npoints + li]);
    return Graph::from_edges(total, e);
}

namespace {

// Distance between a and b in g with the pairs in `skip` treated as deleted,
// early exit above `cap`.
int dist_avoiding(const Graph& g, int a, int b, int cap,
                  const std::vector<std::pair<int, int>>& skip) {
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{a};
    dist[a] = 0;
    auto skipped = [&](int u, int w) {
        for (auto [x, y] : skip)
            if ((u == x && w == y) || (u == y && w == x)) return true;
        return false;
    };
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (u == b) return dist[u];
        if (dist[u] >= cap) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0 && !skipped(u, w)) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    return cap + 1;
}

// One shortest cycle in g (vertex list), or empty if acyclic.
std::vector<int> find_shortest_cycle(const Graph& g) {
    int best = kInfiniteGirth;
    std::vector<int> best_cycle;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u] && dist[u] + dist[w] + 1 < best) {
                    best = dist[u] + dist[w] + 1;
                    best_cycle.clear();
                    for (int x = u; x != -1; x = parent[x]) best_cycle.push_back(x);
                    std::vector<int> other;
                    for (int x = w; x != -1; x = parent[x]) other.push_back(x);
                    // Trim the common tail up to the shared ancestor.
                    while (best_cycle.size() > 1 && other.size() > 1 &&
                           best_cycle[best_cycle.size() - 1] == other[other.size() - 1] &&
                           best_cycle[best_cycle.size() - 2] == other[other.size() - 2]) {
                        best_cycle.pop_back();
                        other.pop_back();
                    }
                    for (auto it = other.rbegin(); it != other.rend(); ++it)
                        if (*it != best_cycle.back()) best_cycle.push_back(*it);
                    if (!best_cycle.empty() && best_cycle.front() == best_cycle.back())
                        best_cycle.pop_back();
                }
            }
        }
    }
    return best_cycle;
}

Graph pairing_with_switches(int n, int deg, int girth_min, Rng& rng, int budget, bool& ok) {
    ok = false;
    // Configuration-model pairing, retried until simple.
    std::vector<std::vector<int>> adj;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * deg);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < deg; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        adj.assign(n, {});
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], w = stubs[i + 1];
            if (u == w) simple = false;
            for (int x : adj[u])
                if (x == w) simple = false;
            if (simple) {
                adj[u].push_back(w);
                adj[w].push_back(u);
            }
        }
        if (simple) break;
        adj.clear();
    }
    if (adj.empty()) return Graph();

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w : adj[u])
            if (u < w) edges.emplace_back(u, w);
    Graph g = Graph::from_edges(n, edges);

    // Break short cycles by 2-edge switches that keep the degree sequence.
    for (int iter = 0; iter < budget; ++iter) {
        std::vector<int> cyc = find_shortest_cycle(g);
        if (cyc.empty() || static_cast<int>(cyc.size()) >= girth_min) {
            ok = true;
            return g;
        }
        int ei = static_cast<int>(rng.uniform_below(cyc.size()));
        int u = cyc[ei], v = cyc[(ei + 1) % cyc.size()];
        // Random partner edge.
        int x, y;
        int guard = 0;
        do {
            auto& pe = edges[rng.uniform_below(edges.size())];
            x = pe.first;
            y = pe.second;
            if (rng.uniform_below(2)) std::swap(x, y);
            if (++guard > 256) {
                x = -1;
                break;
            }
        } while (x == u || x == v || y == u || y == v || g.has_edge(u, x) || g.has_edge(v, y));
        if (x < 0) continue;
        // Accept if the two new edges do not close a cycle shorter than the
        // target once (u,v) and (x,y) are removed.
        std::vector<std::pair<int, int>> removed{{u, v}, {x, y}};
        if (dist_avoiding(g, u, x, girth_min - 2, removed) < girth_min - 1) continue;
        if (dist_avoiding(g, v, y, girth_min - 2, removed) < girth_min - 1) continue;
        std::vector<std::pair<int, int>> new_edges;
        for (auto [a, b] : edges) {
            bool drop = (a == u && b == v) || (a == v && b == u) || (a == x && b == y) || (a == y && b == x);
            if (!drop) new_edges.emplace_back(a, b);
        }
        new_edges.emplace_back(std::min(u, x), std::max(u, x));
        new_edges.emplace_back(std::min(v, y), std::max(v, y));
        edges = std::move(new_edges);
        g = Graph::from_edges(n, edges);
    }
    return g;
}

// Greedy irregular fallback: random spanning tree, then edges between
// far-apart vertices with degrees below the cap.
Graph greedy_girth_graph(int n, int max_deg, int girth_min, Rng& rng) {
    Graph g = gen_random_tree(n, rng.next_u64(), max_deg);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u))
            if (u < w) edges.emplace_back(u, w);
    int fails = 0;
    const int fail_budget = 30 * n;
    while (fails < fail_budget) {
        int u = static_cast<int>(rng.uniform_below(n));
        int w = static_cast<int>(rng.uniform_below(n));
        if (u == w || g.degree(u) >= max_deg || g.degree(w) >= max_deg || g.has_edge(u, w)) {
            ++fails;
            continue;
        }
        if (dist_avoiding(g, u, w, girth_min - 2, {}) < girth_min - 1) {
            ++fails;
            continue;
        }
        edges.emplace_back(std::min(u, w), std::max(u, w));
        g = Graph::from_edges(n, edges);
        fails = 0;
    }
    return g;
}

}  // namespace

long long moore_bound(int deg, int girth) {
    if (girth == kInfiniteGirth) return 1;
    long long total;
    if (girth % 2 == 1) {
        total = 1;
        long long layer = deg;
        for (int i = 0; i < (girth - 1) / 2; ++i) {
            total += layer;
            layer *= (deg - 1);
            if (total > (1LL << 50)) return total;
        }
    } else {
        total = 0;
        long long layer = 1;
        for (int i = 0; i < girth / 2; ++i) {
            total += 2 * layer;
            layer *= (deg - 1);
            if (total > (1LL << 50)) return total;
        }
    }
    return total;
}

Graph gen_random_regular_girth(int n, int deg, int girth_min, std::uint64_t seed) {
    if (n < 2 || deg < 1 || girth_min < 3) throw InputError("random_regular_girth: bad parameters");
    Rng rng(seed);
    const int kRetryBudget = 10000;

    long long moore = moore_bound(deg, girth_min);
    if (static_cast<long long>(n) * deg % 2 == 0 && n >= 2 * moore) {
        bool ok = false;
        Graph g = pairing_with_switches(n, deg, girth_min, rng, kRetryBudget, ok);
        if (ok) return g;
    }
    // Structured regular construction when the pairing route is out of reach:
    // (q+1)-regular girth-8 incidence graph, if it fits the request.
    int q = deg - 1;
    long long gq_n = q >= 2 ? 2LL * (1LL + q + static_cast<long long>(q) * q +
                                     static_cast<long long>(q) * q * q)
                            : 0;
    if (girth_min <= 8 && is_prime(q) && gq_n > 0 && gq_n <= n + n / 5 && gq_n >= n - n / 5)
        return gen_gq_incidence(q, rng.next_u64());

    // Irregular fallback: max-degree deg, girth >= girth_min.
    Graph g = greedy_girth_graph(n, deg, girth_min, rng);
    if (girth(g) < girth_min)
        throw GenerationError("random_regular_girth: girth target unmet after " +
                              std::to_string(kRetryBudget) + " retries");
    return g;
}

GenSpec parse_gen_spec(const std::string& text) {
    GenSpec s;
    auto colon = text.find(':');
    s.kind = colon == std::string::npos ? text : text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (s.kind == "file" || s.kind == "from_edge_list") {
        s.kind = "from_edge_list";
        s.path = rest;
        return s;
    }
    std::vector<long long> nums;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            nums.push_back(std::stoll(tok));
        } catch (...) {
            throw InputError("graph spec: bad number '" + tok + "' in '" + text + "'");
        }
    }
    auto need = [&](std::size_t c) {
        if (nums.size() < c) throw InputError("graph spec '" + text + "': expected " + std::to_string(c) + " parameters");
    };
    if (s.kind == "cycle" || s.kind == "path" || s.kind == "random_tree") {
        need(1);
        s.n = static_cast<int>(nums[0]);
        if (s.kind == "random_tree" && nums.size() > 1) s.degree = static_cast<int>(nums[1]);
    } else if (s.kind == "star") {
        need(1);
        s.degree = static_cast<int>(nums[0]);
    } else if (s.kind == "random_regular_girth") {
        need(3);
        s.n = static_cast<int>(nums[0]);
        s.degree = static_cast<int>(nums[1]);
        s.girth_min = static_cast<int>(nums[2]);
    } else if (s.kind == "regular_tree") {
        need(2);
        s.degree = static_cast<int>(nums[0]);
        s.depth = static_cast<int>(nums[1]);
    } else if (s.kind == "gq_incidence") {
        need(1);
        s.degree = static_cast<int>(nums[0]);  // q
    } else {
        throw InputError("unknown graph kind '" + s.kind + "'");
    }
    return s;
}

Graph gen_graph(const GenSpec& spec, std::uint64_t seed) {
    if (spec.kind == "cycle") return gen_cycle(spec.n);
    if (spec.kind == "path") return gen_path(spec.n);
    if (spec.kind == "star") return gen_star(spec.degree);
    if (spec.kind == "random_tree") return gen_random_tree(spec.n, seed, spec.degree);
    if (spec.kind == "random_regular_girth")
        return gen_random_regular_girth(spec.n, spec.degree, spec.girth_min, seed);
    if (spec.kind == "regular_tree") return gen_regular_tree(spec.degree, spec.depth);
    if (spec.kind == "gq_incidence") return gen_gq_incidence(spec.degree, seed);
    if (spec.kind == "from_edge_list") return read_edge_list_file(spec.path);
    throw InputError("unknown graph kind '" + spec.kind + "'");
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
    std::vector<std::pair<int, int>> e(m);
    for (int i = 0; i < m; ++i)
        if (!(in >> e[i].first >> e[i].second)) throw InputError("edge list: truncated at edge " + std::to_string(i));
    return Graph::from_edges(n, e);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int w : g.neighbors(u))
            if (u < w) out << u << ' ' << w << '\n';
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open edge list file '" + path + "'");
    return read_edge_list(f);
}

}  // namespace glauber
