#include "torusham/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>

namespace torusham {

namespace {

using Clock = std::chrono::steady_clock;

struct HamSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    SearchBudget budget;
    Clock::time_point t0 = Clock::now();

    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> avail;     // free-neighbor count of unvisited vertices
    long nodes = 0;
    bool out_of_budget = false;

    std::vector<int> stack_buf; // reused BFS scratch
    std::vector<int> mark;
    int mark_gen = 0;

    explicit HamSearch(const std::vector<std::vector<int>>& a, SearchBudget b)
        : adj(a), n(static_cast<int>(a.size())), budget(b), on_path(n, 0), avail(n, 0),
          stack_buf(n), mark(n, 0) {
        for (int v = 0; v < n; ++v) avail[v] = static_cast<int>(adj[v].size());
    }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    bool budget_ok() {
        if (++nodes % 1024 == 0 && elapsed() > budget.time_limit_s) out_of_budget = true;
        if (nodes > budget.max_nodes) out_of_budget = true;
        return !out_of_budget;
    }

    // every unvisited vertex needs two usable endpoints; the endpoint and
    // the start count as usable for their neighbors
    bool degree_ok(int head) {
        const int start = path.front();
        for (int v = 0; v < n; ++v) {
            if (on_path[v]) continue;
            int free = 0;
            for (int u : adj[v])
                if (!on_path[u] || u == head || u == start) ++free;
            if (free < 2) return false;
        }
        return true;
    }

    // unvisited vertices plus the head must form one connected piece
    bool connected_ok(int head) {
        int remaining = n - static_cast<int>(path.size());
        if (remaining == 0) return true;
        ++mark_gen;
        int sp = 0;
        // seed from any unvisited neighbor of the head
        int seed = -1;
        for (int u : adj[head])
            if (!on_path[u]) {
                seed = u;
                break;
            }
        if (seed < 0) return false;
        stack_buf[sp++] = seed;
        mark[seed] = mark_gen;
        int seen = 1;
        while (sp > 0) {
            int v = stack_buf[--sp];
            for (int u : adj[v]) {
                if (on_path[u] || mark[u] == mark_gen) continue;
                mark[u] = mark_gen;
                ++seen;
                stack_buf[sp++] = u;
            }
        }
        return seen == remaining;
    }

    bool extend() {
        if (!budget_ok()) return false;
        int head = path.back();
        if (static_cast<int>(path.size()) == n)
            return std::find(adj[head].begin(), adj[head].end(), path.front()) != adj[head].end();
        if (!degree_ok(head) || !connected_ok(head)) return false;
        for (int u : adj[head]) {
            if (on_path[u]) continue;
            on_path[u] = 1;
            path.push_back(u);
            if (extend()) return true;
            path.pop_back();
            on_path[u] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

struct LongSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    SearchBudget budget;
    Clock::time_point t0 = Clock::now();
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> best;
    long nodes = 0;
    bool out_of_budget = false;
    std::vector<int> stack_buf;
    std::vector<int> mark;
    int mark_gen = 0;

    explicit LongSearch(const std::vector<std::vector<int>>& a, SearchBudget b)
        : adj(a), n(static_cast<int>(a.size())), budget(b), on_path(n, 0), stack_buf(n),
          mark(n, 0) {}

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    // upper bound: vertices reachable from the head avoiding the path
    int reachable(int head, int start) {
        ++mark_gen;
        int sp = 0, seen = 0;
        stack_buf[sp++] = head;
        mark[head] = mark_gen;
        bool start_touchable = false;
        while (sp > 0) {
            int v = stack_buf[--sp];
            for (int u : adj[v]) {
                if (u == start) start_touchable = true;
                if (on_path[u] || mark[u] == mark_gen) continue;
                mark[u] = mark_gen;
                ++seen;
                stack_buf[sp++] = u;
            }
        }
        return start_touchable ? seen : -1;
    }

    void dfs(int start) {
        if (++nodes > budget.max_nodes || (nodes % 1024 == 0 && elapsed() > budget.time_limit_s)) {
            out_of_budget = true;
            return;
        }
        int head = path.back();
        bool closes = std::find(adj[head].begin(), adj[head].end(), start) != adj[head].end();
        if (closes && path.size() >= 3 && path.size() > best.size()) best = path;
        int reach = reachable(head, start);
        if (reach < 0) return; // the start is cut off, no cycle through here
        if (static_cast<int>(path.size()) + reach <= static_cast<int>(best.size())) return;
        for (int u : adj[head]) {
            if (on_path[u]) continue;
            on_path[u] = 1;
            path.push_back(u);
            dfs(start);
            path.pop_back();
            on_path[u] = 0;
            if (out_of_budget) return;
        }
    }
};

struct Dinic {
    struct Edge {
        int to, cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> g;
    std::vector<int> level, it;

    explicit Dinic(int n) : g(n), level(n), it(n) {}
    void add(int a, int b, int cap) {
        g[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, cap});
        g[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, 0});
    }
    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q = {s};
        level[s] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int id : g[v])
                if (edges[id].cap > 0 && level[edges[id].to] < 0) {
                    level[edges[id].to] = level[v] + 1;
                    q.push_back(edges[id].to);
                }
        }
        return level[t] >= 0;
    }
    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(g[v].size()); ++i) {
            int id = g[v][i];
            if (edges[id].cap <= 0 || level[edges[id].to] != level[v] + 1) continue;
            int d = dfs(edges[id].to, t, std::min(f, edges[id].cap));
            if (d > 0) {
                edges[id].cap -= d;
                edges[id ^ 1].cap += d;
                return d;
            }
        }
        return 0;
    }
    int maxflow(int s, int t, int cap_limit) {
        int flow = 0;
        while (flow < cap_limit && bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int f = dfs(s, t, cap_limit - flow)) {
                flow += f;
                if (flow >= cap_limit) break;
            }
        }
        return flow;
    }
};

// minimum number of internally disjoint paths between non-adjacent u, v
int local_connectivity(const std::vector<std::vector<int>>& adj, int u, int v) {
    const int n = static_cast<int>(adj.size());
    Dinic d(2 * n);
    for (int w = 0; w < n; ++w) d.add(2 * w, 2 * w + 1, (w == u || w == v) ? n : 1);
    for (int a = 0; a < n; ++a)
        for (int b : adj[a]) d.add(2 * a + 1, 2 * b, n);
    return d.maxflow(2 * u, 2 * v + 1, n);
}

} // namespace

OracleVerdict find_hamiltonian(const std::vector<std::vector<int>>& adjacency,
                               const SearchBudget& budget) {
    OracleVerdict out;
    const int n = static_cast<int>(adjacency.size());
    if (n < 3) {
        out.status = OracleStatus::NonHamiltonian;
        return out;
    }
    HamSearch hs(adjacency, budget);
    hs.on_path[0] = 1;
    hs.path.push_back(0);
    bool found = hs.extend();
    out.nodes_explored = hs.nodes;
    out.elapsed_s = hs.elapsed();
    if (found) {
        out.status = OracleStatus::Hamiltonian;
        out.cycle = hs.path;
    } else {
        out.status = hs.out_of_budget ? OracleStatus::Inconclusive : OracleStatus::NonHamiltonian;
    }
    return out;
}

OracleVerdict find_hamiltonian(const ToroidalMap& map, const SearchBudget& budget) {
    return find_hamiltonian(map.rotation(), budget);
}

LongestCycleResult longest_cycle(const std::vector<std::vector<int>>& adjacency,
                                 const SearchBudget& budget) {
    LongestCycleResult out;
    const int n = static_cast<int>(adjacency.size());
    if (n > 80) {
        out.exact = false; // guarded: exhaustive search is not attempted
        return out;
    }
    LongSearch ls(adjacency, budget);
    // every cycle has a minimum vertex; rooting at each start in turn keeps
    // the enumeration exhaustive while pruning symmetric repeats
    for (int start = 0; start < n && !ls.out_of_budget; ++start) {
        if (n - start <= static_cast<int>(ls.best.size())) break;
        std::fill(ls.on_path.begin(), ls.on_path.end(), 0);
        for (int w = 0; w < start; ++w) ls.on_path[w] = 1; // forbid smaller roots
        ls.on_path[start] = 1;
        ls.path = {start};
        ls.dfs(start);
    }
    out.length = static_cast<int>(ls.best.size());
    out.witness = ls.best;
    out.exact = !ls.out_of_budget;
    out.nodes_explored = ls.nodes;
    out.elapsed_s = ls.elapsed();
    return out;
}

LongestCycleResult longest_cycle(const ToroidalMap& map, const SearchBudget& budget) {
    return longest_cycle(map.rotation(), budget);
}

int vertex_connectivity(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n <= 1) return 0;
    int min_deg = n;
    int v0 = 0;
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(adjacency[v].size()) < min_deg) {
            min_deg = static_cast<int>(adjacency[v].size());
            v0 = v;
        }
    int best = n - 1; // complete graph
    std::vector<char> nb(n, 0);
    for (int u : adjacency[v0]) nb[u] = 1;
    for (int t = 0; t < n; ++t)
        if (t != v0 && !nb[t]) best = std::min(best, local_connectivity(adjacency, v0, t));
    // a minimum cut containing v0 separates two of its neighbors
    const auto& nbrs = adjacency[v0];
    for (size_t a = 0; a < nbrs.size(); ++a)
        for (size_t b = a + 1; b < nbrs.size(); ++b) {
            int u = nbrs[a], w = nbrs[b];
            bool adj = std::find(adjacency[u].begin(), adjacency[u].end(), w) !=
                       adjacency[u].end();
            if (!adj) best = std::min(best, local_connectivity(adjacency, u, w));
        }
    return best;
}

int vertex_connectivity(const ToroidalMap& map) {
    return vertex_connectivity(map.rotation());
}

long g1_extension_length(long base, long m1, long m2) { return base + 6 * m1 + m2; }

long disk_boundary_length(long m1, long m2) { return 10 * m1 + m2 + 2; }

} // namespace torusham
