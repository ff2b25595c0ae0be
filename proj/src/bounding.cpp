#include "glauber/bounding.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace glauber {

const char* to_string(ColorClass c) {
    switch (c) {
        case ColorClass::Available: return "A";
        case ColorClass::Blocked: return "B";
        case ColorClass::Hazardous: return "H";
    }
    return "?";
}

const char* to_string(BcFailure f) {
    switch (f) {
        case BcFailure::None: return "none";
        case BcFailure::Cycle: return "cycle";
        case BcFailure::Repropagation: return "repropagation";
        case BcFailure::SizeCap: return "size_cap";
    }
    return "?";
}

BoundingState::BoundingState(const Graph& g, const Labeling& x0, const Labeling& y0) {
    if (x0.n() != y0.n() || x0.k != y0.k) throw InputError("bounding: mismatched labelings");
    if (x0.n() != g.n()) throw InputError("bounding: labeling size != graph size");
    k_ = x0.k;
    z_.assign(g.n(), ColorSet(k_));
    multi_.assign(g.n(), 0);
    ever_multi_.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        z_[v].insert(x0(v));
        z_[v].insert(y0(v));
        if (z_[v].size() > 1) make_multi(v);
    }
}

void BoundingState::make_multi(int v) {
    if (!multi_[v]) {
        multi_[v] = 1;
        multi_list_.push_back(v);
    }
    if (!ever_multi_[v]) {
        ever_multi_[v] = 1;
        ever_multi_list_.push_back(v);
    }
}

ColorClass BoundingState::classify(const Graph& g, int v, Color c) const {
    bool blocked = false;
    for (int w : g.neighbors(v)) {
        if (z_[w].contains(c)) {
            if (multi_[w]) return ColorClass::Hazardous;
            blocked = true;
        }
    }
    return blocked ? ColorClass::Blocked : ColorClass::Available;
}

int BoundingState::first_multi_neighbor(const Graph& g, int v) const {
    for (int w : g.neighbors(v))  // adjacency is sorted ascending
        if (multi_[w]) return w;
    return -1;
}

ColorClass BoundingState::step(const Graph& g, const Update& upd) {
    ColorClass cls = classify(g, upd.v, upd.c);
    switch (cls) {
        case ColorClass::Available:
            z_[upd.v].set_single(upd.c);
            if (multi_[upd.v]) {
                multi_[upd.v] = 0;
                multi_list_.erase(std::find(multi_list_.begin(), multi_list_.end(), upd.v));
            }
            break;
        case ColorClass::Blocked:
            break;
        case ColorClass::Hazardous:
            if (!multi_[upd.v]) {
                int w = first_multi_neighbor(g, upd.v);
                z_[upd.v].union_with(z_[w]);
                make_multi(upd.v);
            }
            // Rule (4a): already multivalued, set unchanged.
            break;
    }
    return cls;
}

namespace {

// Does some P-vertex other than `parent` lie within distance 4 of v along a
// path whose interior avoids P?  (Closes a cycle using at most 3 extra
// vertices.)  Reaching `parent` itself through an outside path of length >= 2
// also counts.
bool completes_short_cycle(const Graph& g, const std::vector<std::uint8_t>& in_p, int v,
                           int parent) {
    std::vector<std::pair<int, int>> frontier{{v, 0}};  // (vertex, depth)
    std::vector<int> touched{v};
    // Small ad-hoc BFS with per-call visited marks.
    static thread_local std::vector<int> mark;
    static thread_local int stamp = 0;
    if (mark.size() < static_cast<std::size_t>(g.n())) mark.assign(g.n(), 0);
    ++stamp;
    mark[v] = stamp;
    std::deque<std::pair<int, int>> q{{v, 0}};
    while (!q.empty()) {
        auto [u, d] = q.front();
        q.pop_front();
        if (d >= 4) continue;
        for (int w : g.neighbors(u)) {
            if (in_p[w]) {
                if (u == v && w == parent) continue;  // the attaching edge itself
                if (w == v) continue;
                return true;  // outside path of length d+1 <= 4 into P
            }
            if (mark[w] != stamp && d + 1 < 4) {
                mark[w] = stamp;
                q.push_back({w, d + 1});
            }
        }
    }
    (void)touched;
    (void)frontier;
    return false;
}

}  // namespace

BoundingTrace run_bounding_chain(const Graph& g, const Labeling& x0, const Labeling& y0,
                                 const UpdateSequence& sigma, const BoundingConfig& cfg) {
    std::vector<int> diff = hamming_set(x0, y0);
    if (diff.size() != 1) throw InputError("run_bounding_chain: labelings must differ at exactly one vertex");

    BoundingState z(g, x0, y0);
    BoundingTrace tr;
    std::vector<std::uint8_t> in_p(g.n(), 0);
    in_p[diff[0]] = 1;
    tr.p_entry_order.push_back(diff[0]);
    tr.p_entry_times.push_back(0);

    auto fail = [&](BcFailure f, int t) {
        if (tr.bc_true) {
            tr.bc_true = false;
            tr.failure = f;
            tr.failure_t = t;
        }
    };

    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int t = static_cast<int>(i) + 1;
        const Update& u = sigma[i];
        bool was_multi = z.is_multi(u.v);
        bool was_ever = z.ever_multi(u.v);
        int parent = -1;
        ColorClass cls = z.classify(g, u.v, u.c);
        if (cls == ColorClass::Hazardous) {
            if (was_ever) fail(BcFailure::Repropagation, t);
            if (!was_multi) {
                parent = z.first_multi_neighbor(g, u.v);
                // Condition (1): unique parent ...
                int multi_nbrs = 0;
                for (int w : g.neighbors(u.v))
                    if (in_p[w]) ++multi_nbrs;
                if (multi_nbrs != 1 && tr.bc_true) fail(BcFailure::Cycle, t);
                // ... and no three extra vertices closing a cycle.
                if (tr.bc_true && completes_short_cycle(g, in_p, u.v, parent))
                    fail(BcFailure::Cycle, t);
            }
        }
        z.step(g, u);
        if (!was_ever && z.ever_multi(u.v)) {
            in_p[u.v] = 1;
            tr.p_entry_order.push_back(u.v);
            tr.p_entry_times.push_back(t);
            if (static_cast<long long>(tr.p_entry_order.size()) > cfg.p_max)
                fail(BcFailure::SizeCap, t);
        }
        tr.max_zsize = std::max(tr.max_zsize, z.z(u.v).size());
        if (cfg.record_steps)
            tr.steps.push_back({t, u.v, u.c, cls, z.z(u.v).size()});
    }
    tr.p_final = tr.p_entry_order;
    std::sort(tr.p_final.begin(), tr.p_final.end());
    return tr;
}

std::string bounding_trace_to_json(const BoundingTrace& t) {
    nlohmann::json j;
    j["bc_verdict"] = t.bc_true;
    j["failure_reason"] = to_string(t.failure);
    j["failure_t"] = t.failure_t;
    j["p_final"] = t.p_final;
    j["p_entry_times"] = t.p_entry_times;
    j["max_zsize"] = t.max_zsize;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"t", s.t}, {"v", s.v}, {"c", s.c}, {"class", to_string(s.cls)}, {"zsize", s.zsize_after}});
    j["steps"] = steps;
    return j.dump();
}

}  // namespace glauber
