#pragma once

// Labelings on the extended space (properness not required), update
// sequences, the Metropolis step, trajectory evolution with success flags,
// continuous-time simulation, and Hamming machinery.
//
// Colors are 1-based, as in the usual statement of the dynamics; vertex ids
// are 0-based.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "glauber/graph.hpp"
#include "glauber/rng.hpp"

namespace glauber {

using Color = int;  // 1..k

// Dynamic bitset over colors 1..k.  One implementation serves both the
// "bitset when k <= 128" and the large-k regime; the contract is semantic
// (exact membership and equality).
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(int k) : k_(k), bits_((k + 64) / 64, 0) {}

    int k() const { return k_; }
    bool contains(Color c) const { return (bits_[word(c)] >> bit(c)) & 1ULL; }
    void insert(Color c) { bits_[word(c)] |= 1ULL << bit(c); }
    void erase(Color c) { bits_[word(c)] &= ~(1ULL << bit(c)); }
    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
    void set_single(Color c) {
        clear();
        insert(c);
    }
    void union_with(const ColorSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    }
    int size() const {
        int s = 0;
        for (std::uint64_t w : bits_) s += __builtin_popcountll(w);
        return s;
    }
    std::vector<Color> to_vector() const;  // ascending
    bool operator==(const ColorSet& o) const { return k_ == o.k_ && bits_ == o.bits_; }

private:
    static std::size_t word(Color c) { return static_cast<std::size_t>(c - 1) >> 6; }
    static unsigned bit(Color c) { return static_cast<unsigned>(c - 1) & 63u; }
    int k_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Labeling {
    int k = 0;
    std::vector<Color> colors;  // size n, entries in 1..k

    Labeling() = default;
    Labeling(int n, int k_, Color fill = 1) : k(k_), colors(n, fill) {}
    int n() const { return static_cast<int>(colors.size()); }
    Color operator()(int v) const { return colors[v]; }
    Color& operator[](int v) { return colors[v]; }
    bool operator==(const Labeling& o) const { return k == o.k && colors == o.colors; }
};

struct Update {
    int v = 0;
    Color c = 1;
    bool operator==(const Update& o) const { return v == o.v && c == o.c; }
};

// The full randomness sigma driving a chain.  Stored up front: the global
// coupling reads and rewrites future coordinates.
using UpdateSequence = std::vector<Update>;

bool is_proper(const Graph& g, const Labeling& x);
// Greedy proper coloring; requires k >= max_degree + 1.
Labeling greedy_proper(const Graph& g, int k);

// A(x, v) = [k] \ x(N(v)).
ColorSet available_colors(const Graph& g, const Labeling& x, int v);
int available_color_count(const Graph& g, const Labeling& x, int v);
// A_v(x, w) = [k] \ x(N(w) \ {v}): availability at w ignoring the color at v.
ColorSet available_colors_excluding(const Graph& g, const Labeling& x, int w, int v);

// Extended-space Metropolis rule: recolor iff the proposed color is absent
// from the neighborhood; rejected proposals keep the old color even on
// improper labelings.  Returns true iff accepted.
bool metropolis_step(const Graph& g, Labeling& x, const Update& upd);

struct Trajectory {
    Labeling initial;
    UpdateSequence sigma;
    std::vector<std::uint8_t> accepted;            // size T
    std::vector<int> checkpoint_times;             // ascending
    std::vector<Labeling> checkpoints;             // parallel to times
    Labeling final;
};

// Deterministic fold of metropolis_step; records per-step acceptance and the
// labelings at the requested times (time t = number of steps applied).
Trajectory evolve(const Graph& g, const Labeling& x0, const UpdateSequence& sigma,
                  const std::vector<int>& checkpoint_times = {});

// Random access into a trajectory: per-vertex logs of successful recolorings
// and of proposal times.  Times are 1-based (step t transforms X_{t-1} into
// X_t); time 0 refers to the initial labeling.
class SuccessLog {
public:
    SuccessLog() = default;
    SuccessLog(const Graph& g, const Labeling& x0, const UpdateSequence& sigma);

    int horizon() const { return t_max_; }
    Color color_at(int v, int t) const;
    // Largest successful-update time of v in [1, t]; 0 if none.
    int last_success(int v, int t) const;
    // Smallest successful-update time of v in (t, T]; T+1 if none.
    int next_success(int v, int t) const;
    // Proposal times s in [lo, hi] with v_s = v (accepted or not), ascending.
    const std::vector<int>& proposal_times(int v) const { return proposals_[v]; }
    Labeling labeling_at(int t) const;

private:
    const Labeling* x0_ = nullptr;
    int t_max_ = 0;
    std::vector<std::vector<std::pair<int, Color>>> successes_;  // (time, new color)
    std::vector<std::vector<int>> proposals_;
};

// T i.i.d. proposals: vertex uniform on V, color uniform on [k].
UpdateSequence sample_update_sequence(int n, int k, int T, Rng& rng);

struct CTEvent {
    double time = 0.0;
    int v = 0;
    Color c = 1;
    bool accepted = false;
};

struct CTTrajectory {
    Labeling initial;
    std::vector<CTEvent> events;  // strictly increasing times
    Labeling final;
    double t_end = 0.0;
};

// Continuous-time Metropolis dynamics via rate-1 proposal clocks per vertex
// (equivalently one global rate-n clock with a uniform vertex), uniform color
// on [k] at each ring; distributionally the successful-update description by
// thinning.
CTTrajectory ct_simulate(const Graph& g, const Labeling& x0, double t_end, Rng& rng);

// Disagreement set x (+) y, ascending vertex order.
std::vector<int> hamming_set(const Labeling& x, const Labeling& y);
int hamming(const Labeling& x, const Labeling& y);
// Minimal-length interpolation Z_0 = x, ..., Z_d = y switching disagreeing
// coordinates to y's color in ascending vertex order; intermediate labelings
// may be improper.
std::vector<Labeling> hamming_interpolation(const Labeling& x, const Labeling& y);

// Text formats.  Labeling: "n k" then n colors.  UpdateSequence: "T" then T
// lines "v c".
void write_labeling(const Labeling& x, std::ostream& out);
Labeling read_labeling(std::istream& in);
void write_update_sequence(const UpdateSequence& s, std::ostream& out);
UpdateSequence read_update_sequence(std::istream& in);

}  // namespace glauber
