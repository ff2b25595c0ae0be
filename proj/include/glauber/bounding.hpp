#pragma once

// The bounding chain Z_t: per-vertex color sets dominating the colors either
// coupled chain can carry, the potential-discrepancy sets P_t, and the BC
// predicate with diagnostics.

#include <string>
#include <vector>

#include "glauber/dynamics.hpp"
#include "glauber/graph.hpp"

namespace glauber {

enum class ColorClass : std::uint8_t { Available, Blocked, Hazardous };
enum class BcFailure : std::uint8_t { None, Cycle, Repropagation, SizeCap };

const char* to_string(ColorClass c);
const char* to_string(BcFailure f);

// Z state and the index of multivalued vertices.  Steppable: classify the
// proposal, then apply update rules (1)-(4).
class BoundingState {
public:
    BoundingState() = default;
    // Z_0(v) = {X_0(v), Y_0(v)}.
    BoundingState(const Graph& g, const Labeling& x0, const Labeling& y0);

    int k() const { return k_; }
    const ColorSet& z(int v) const { return z_[v]; }
    bool is_multi(int v) const { return multi_[v] != 0; }
    bool ever_multi(int v) const { return ever_multi_[v] != 0; }
    const std::vector<int>& multi_list() const { return multi_list_; }  // unordered
    const std::vector<int>& ever_multi_list() const { return ever_multi_list_; }  // entry order

    // Classification of color c at vertex v against Z_{t-1}: Available iff no
    // neighbor set contains c; Hazardous iff some multivalued neighbor set
    // contains c (precedence over Blocked); Blocked otherwise.
    ColorClass classify(const Graph& g, int v, Color c) const;

    // First multivalued neighbor of v in ascending vertex id; -1 if none.
    int first_multi_neighbor(const Graph& g, int v) const;

    // Applies one update; returns its classification.  New multivalued
    // vertices are appended to the entry-order list.
    ColorClass step(const Graph& g, const Update& upd);

private:
    void make_multi(int v);
    int k_ = 0;
    std::vector<ColorSet> z_;
    std::vector<std::uint8_t> multi_;
    std::vector<std::uint8_t> ever_multi_;
    std::vector<int> multi_list_;
    std::vector<int> ever_multi_list_;
};

// Spec-level wrappers over the stateful fold.
inline ColorClass classify(const Graph& g, const BoundingState& z, int v, Color c) {
    return z.classify(g, v, c);
}
inline BoundingState bounding_step(const Graph& g, BoundingState z, const Update& upd) {
    z.step(g, upd);
    return z;
}

struct BoundingStepRecord {
    int t;  // 1-based
    int v;
    Color c;
    ColorClass cls;
    int zsize_after;
};

struct BoundingConfig {
    long long p_max = 100000;   // size cap replacing the asymptotic constant
    bool record_steps = false;  // keep the per-step record (heavy on long runs)
};

struct BoundingTrace {
    bool bc_true = true;
    BcFailure failure = BcFailure::None;
    int failure_t = 0;                      // first violating step, 0 if none
    std::vector<int> p_final;               // P = union over t, ascending ids
    std::vector<int> p_entry_times;         // parallel to entry order
    std::vector<int> p_entry_order;         // vertices in entry order
    std::vector<BoundingStepRecord> steps;  // only when record_steps
    int max_zsize = 1;
};

// Folds the bounding chain over sigma from Z_0 = {x0, y0}, evaluating the BC
// conditions incrementally: (1) G[P] acyclic and no three extra vertices
// close a cycle (unique parent at entry + no outside path of length <= 4 to
// another P vertex), (2) no repropagation (a hazardous proposal at a vertex
// already in P), (3) |P| <= p_max.  The verdict latches on the first
// violation but the Z trace is completed regardless.
BoundingTrace run_bounding_chain(const Graph& g, const Labeling& x0, const Labeling& y0,
                                 const UpdateSequence& sigma, const BoundingConfig& cfg = {});

std::string bounding_trace_to_json(const BoundingTrace& t);

}  // namespace glauber
