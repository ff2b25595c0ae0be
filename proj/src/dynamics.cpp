#include "glauber/dynamics.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace glauber {

std::vector<Color> ColorSet::to_vector() const {
    std::vector<Color> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
            out.push_back(static_cast<Color>(64 * w + b + 1));
            word &= word - 1;
        }
    }
    return out;
}

bool is_proper(const Graph& g, const Labeling& x) {
    for (int u = 0; u < g.n(); ++u)
        for (int w : g.neighbors(u))
            if (w > u && x(u) == x(w)) return false;
    return true;
}

Labeling greedy_proper(const Graph& g, int k) {
    if (k < g.max_degree() + 1) throw InputError("greedy_proper: k < max_degree + 1");
    Labeling x(g.n(), k);
    for (int v = 0; v < g.n(); ++v) {
        ColorSet used(k);
        for (int w : g.neighbors(v))
            if (w < v) used.insert(x(w));
        for (Color c = 1; c <= k; ++c)
            if (!used.contains(c)) {
                x[v] = c;
                break;
            }
    }
    return x;
}

ColorSet available_colors(const Graph& g, const Labeling& x, int v) {
    g.check_vertex(v);
    ColorSet used(x.k);
    for (int w : g.neighbors(v)) used.insert(x(w));
    ColorSet avail(x.k);
    for (Color c = 1; c <= x.k; ++c)
        if (!used.contains(c)) avail.insert(c);
    return avail;
}

int available_color_count(const Graph& g, const Labeling& x, int v) {
    ColorSet used(x.k);
    int distinct = 0;
    for (int w : g.neighbors(v)) {
        Color c = x(w);
        if (!used.contains(c)) {
            used.insert(c);
            ++distinct;
        }
    }
    return x.k - distinct;
}

ColorSet available_colors_excluding(const Graph& g, const Labeling& x, int w, int v) {
    g.check_vertex(w);
    ColorSet used(x.k);
    for (int u : g.neighbors(w))
        if (u != v) used.insert(x(u));
    ColorSet avail(x.k);
    for (Color c = 1; c <= x.k; ++c)
        if (!used.contains(c)) avail.insert(c);
    return avail;
}

bool metropolis_step(const Graph& g, Labeling& x, const Update& upd) {
    g.check_vertex(upd.v);
    if (upd.c < 1 || upd.c > x.k) throw InputError("color out of range");
    for (int w : g.neighbors(upd.v))
        if (x(w) == upd.c) return false;
    x[upd.v] = upd.c;
    return true;
}

Trajectory evolve(const Graph& g, const Labeling& x0, const UpdateSequence& sigma,
                  const std::vector<int>& checkpoint_times) {
    Trajectory tr;
    tr.initial = x0;
    tr.sigma = sigma;
    tr.accepted.resize(sigma.size());
    std::vector<int> cps = checkpoint_times;
    std::sort(cps.begin(), cps.end());
    Labeling x = x0;
    std::size_t ci = 0;
    auto flush_checkpoints = [&](int t) {
        while (ci < cps.size() && cps[ci] == t) {
            tr.checkpoint_times.push_back(t);
            tr.checkpoints.push_back(x);
            ++ci;
        }
    };
    flush_checkpoints(0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        tr.accepted[i] = metropolis_step(g, x, sigma[i]) ? 1 : 0;
        flush_checkpoints(static_cast<int>(i) + 1);
    }
    tr.final = std::move(x);
    return tr;
}

SuccessLog::SuccessLog(const Graph& g, const Labeling& x0, const UpdateSequence& sigma) {
    x0_ = &x0;
    t_max_ = static_cast<int>(sigma.size());
    successes_.assign(x0.n(), {});
    proposals_.assign(x0.n(), {});
    Labeling x = x0;
    for (int i = 0; i < t_max_; ++i) {
        const Update& u = sigma[i];
        proposals_[u.v].push_back(i + 1);
        if (metropolis_step(g, x, u)) successes_[u.v].emplace_back(i + 1, u.c);
    }
}

Color SuccessLog::color_at(int v, int t) const {
    const auto& log = successes_[v];
    auto it = std::upper_bound(log.begin(), log.end(), std::make_pair(t, std::numeric_limits<Color>::max()));
    if (it == log.begin()) return (*x0_)(v);
    return std::prev(it)->second;
}

int SuccessLog::last_success(int v, int t) const {
    const auto& log = successes_[v];
    auto it = std::upper_bound(log.begin(), log.end(), std::make_pair(t, std::numeric_limits<Color>::max()));
    if (it == log.begin()) return 0;
    return std::prev(it)->first;
}

int SuccessLog::next_success(int v, int t) const {
    const auto& log = successes_[v];
    auto it = std::upper_bound(log.begin(), log.end(), std::make_pair(t, std::numeric_limits<Color>::max()));
    if (it == log.end()) return t_max_ + 1;
    return it->first;
}

Labeling SuccessLog::labeling_at(int t) const {
    Labeling x = *x0_;
    for (int v = 0; v < x.n(); ++v) x[v] = color_at(v, t);
    return x;
}

UpdateSequence sample_update_sequence(int n, int k, int T, Rng& rng) {
    if (T < 0) throw InputError("sample_update_sequence: T < 0");
    UpdateSequence s(T);
    for (int i = 0; i < T; ++i) {
        s[i].v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        s[i].c = static_cast<Color>(rng.uniform_below(static_cast<std::uint64_t>(k))) + 1;
    }
    return s;
}

CTTrajectory ct_simulate(const Graph& g, const Labeling& x0, double t_end, Rng& rng) {
    if (t_end < 0) throw InputError("ct_simulate: t_end < 0");
    CTTrajectory tr;
    tr.initial = x0;
    tr.t_end = t_end;
    Labeling x = x0;
    double t = 0.0;
    const int n = g.n();
    for (;;) {
        t += rng.exponential(static_cast<double>(n));
        if (t >= t_end) break;
        CTEvent ev;
        ev.time = t;
        ev.v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        ev.c = static_cast<Color>(rng.uniform_below(static_cast<std::uint64_t>(x.k))) + 1;
        ev.accepted = metropolis_step(g, x, {ev.v, ev.c});
        tr.events.push_back(ev);
    }
    tr.final = std::move(x);
    return tr;
}

std::vector<int> hamming_set(const Labeling& x, const Labeling& y) {
    if (x.n() != y.n() || x.k != y.k) throw InputError("hamming: mismatched labelings");
    std::vector<int> d;
    for (int v = 0; v < x.n(); ++v)
        if (x(v) != y(v)) d.push_back(v);
    return d;
}

int hamming(const Labeling& x, const Labeling& y) {
    return static_cast<int>(hamming_set(x, y).size());
}

std::vector<Labeling> hamming_interpolation(const Labeling& x, const Labeling& y) {
    std::vector<int> diff = hamming_set(x, y);
    std::vector<Labeling> path;
    path.reserve(diff.size() + 1);
    Labeling z = x;
    path.push_back(z);
    for (int v : diff) {
        z[v] = y(v);
        path.push_back(z);
    }
    return path;
}

void write_labeling(const Labeling& x, std::ostream& out) {
    out << x.n() << ' ' << x.k << '\n';
    for (int v = 0; v < x.n(); ++v) out << x(v) << (v + 1 == x.n() ? '\n' : ' ');
}

Labeling read_labeling(std::istream& in) {
    int n, k;
    if (!(in >> n >> k)) throw InputError("labeling: missing 'n k' header");
    Labeling x(n, k);
    for (int v = 0; v < n; ++v) {
        if (!(in >> x[v])) throw InputError("labeling: truncated color list");
        if (x[v] < 1 || x[v] > k) throw InputError("labeling: color out of range at vertex " + std::to_string(v));
    }
    return x;
}

void write_update_sequence(const UpdateSequence& s, std::ostream& out) {
    out << s.size() << '\n';
    for (const Update& u : s) out << u.v << ' ' << u.c << '\n';
}

UpdateSequence read_update_sequence(std::istream& in) {
    int T;
    if (!(in >> T)) throw InputError("update sequence: missing length");
    UpdateSequence s(T);
    for (int i = 0; i < T; ++i)
        if (!(in >> s[i].v >> s[i].c)) throw InputError("update sequence: truncated at step " + std::to_string(i));
    return s;
}

}  // namespace glauber
