#pragma once

// Epochs, exchangeable/avoid/swap sets, the complementary matchings, the
// local non-Markovian and Jerrum transformations, the composed global
// coupling F with discrepancy/temporary tracking, and the reverse-run
// validity checker.
//
// Times are 1-based: step t maps X_{t-1} to X_t; tau^- = 0 and
// tau^+ = T+1 are the "never" sentinels.

#include <optional>
#include <string>
#include <vector>

#include "glauber/bounding.hpp"
#include "glauber/dynamics.hpp"
#include "glauber/graph.hpp"

namespace glauber {

struct EpochInterval {
    int tau_minus = 0;  // last successful update time of w in [1, t], 0 if none
    int tau_plus = 0;   // next successful update time in (t, T], T+1 if none
    bool defined() const { return tau_minus > 0; }
};

EpochInterval epoch(const SuccessLog& log, int w, int t);

// Ex(w, t): the current color of w plus every color available at w's last
// successful recoloring that no neighbor of w proposed during the punctured
// epoch.  Empty when w has no successful update before t.
ColorSet exchangeable(const Graph& g, const SuccessLog& log, const UpdateSequence& sigma,
                      int w, int t);

// Avoid_P(t): neighbors of v_t (other than the parent) whose epoch contains a
// proposal by v_t of their own carried color, together with all of P.
// Swap_P(c, t) = {w in N_P(v_t) : c in Ex(w, t)} \ Avoid_P(t).
std::vector<int> avoid_set(const Graph& g, const SuccessLog& log, const UpdateSequence& sigma,
                           const std::vector<std::uint8_t>& in_p, int t, int v_t, int parent);
std::vector<int> swap_set(const Graph& g, const SuccessLog& log, const UpdateSequence& sigma,
                          const std::vector<std::uint8_t>& in_p, int t, int v_t, Color c,
                          const std::vector<int>& avoid);

// Orders both swap sets by decreasing |Ex|, ties by ascending vertex id, and
// matches them index-wise.  alpha[i] pairs ordered_cb[i] with ordered_cu[i]
// for i < min size.
struct AlphaBeta {
    std::vector<int> ordered_cb;  // Swap(c_b, t) in matching order
    std::vector<int> ordered_cu;  // Swap(c_u, t) in matching order
    int matched = 0;              // min of the two sizes
    // beta_z maps the j-th smallest color of Ex(alpha(z)) to the j-th
    // smallest of Ex(z); evaluated on demand from the Ex sets.
};
AlphaBeta build_alpha_beta(const Graph& g, const SuccessLog& log, const UpdateSequence& sigma,
                           int t, const std::vector<int>& swap_cb, const std::vector<int>& swap_cu);

// Everything the local transformation needs, resolved against a concrete
// reference trajectory.
struct NmContext {
    int t = 0;
    int v_t = 0;
    int parent = 0;
    Color c_t = 0;   // the hazardous proposal (== c of the input sequence at t)
    Color c_b = 0;   // the unique H* color present on X_{t-1}(N_P(v_t))
    Color c_u = 0;   // the other H* color
    std::vector<int> blocking;       // B, ascending
    std::vector<int> alpha_of;       // alpha(w) per blocking entry
    std::vector<int> temp;           // W = B + alpha(B), ascending
    std::vector<std::pair<int, Color>> edits;  // (time, new color), time-sorted
};

// Failure taxonomy for diagnostics: 0 = precondition (hazard/parent/H*
// bullets) failed, 1..6 = the respective well-definedness bullet.
constexpr int kNmPrelim = 0;

// Evaluates the preconditions and well-definedness bullets for a candidate
// local transformation at time t against the given reference trajectory and
// bounding data; on success returns the fully built context (with edit list).
// `zstate` must be the bounding state after t-1 steps; `in_p` marks the
// whole-run P.  When `hstar` is given, the transformation is instantiated at
// that fixed unordered color pair (the blocked/unblocked roles are re-derived
// from the current reference states); this is how a second application of
// NM_{t,H*} to an already-edited sequence is evaluated.  Without it the full
// precondition chain derives H* = {X_{t-1}(parent), c_t}.
struct NmOutcome {
    bool ok = false;
    int failed_bullet = -1;  // kNmPrelim or 1..6; -1 when ok
    NmContext ctx;
};
NmOutcome nm_evaluate(const Graph& g, const SuccessLog& log, const UpdateSequence& sigma,
                      const BoundingState& zstate, const std::vector<std::uint8_t>& in_p,
                      bool bc_true, int t,
                      const std::optional<std::pair<Color, Color>>& hstar = std::nullopt);

// Standalone local transformation: recomputes the bounding chain and the
// reference trajectory of x0 under `sigma` itself, then applies the edit.
// Returns nothing when the transformation is not defined at t -- the caller
// must gate on that.  Applying it twice (passing the same H* the second
// time) restores the input.
std::optional<UpdateSequence> nm_transform(const Graph& g, const Labeling& x0, const Labeling& y0,
                                           const UpdateSequence& sigma, int t,
                                           const std::optional<std::pair<Color, Color>>& hstar = std::nullopt,
                                           const BoundingConfig& bcfg = {},
                                           NmContext* ctx_out = nullptr);

// c'_t flips within the unordered pair H when |H| = 2 and c_t is in H; all
// other coordinates unchanged.
UpdateSequence jerrum_transform(const UpdateSequence& sigma, int t, Color h1, Color h2);

enum class LocalMap : std::uint8_t { Id, Jerrum, Nm };
const char* to_string(LocalMap m);

enum class CouplingMode : std::uint8_t { NonMarkovian, JerrumOnly };

struct CouplingConfig {
    long long p_max = 100000;
    CouplingMode mode = CouplingMode::NonMarkovian;
    bool record_steps = true;       // keep per-step events for touched steps
    bool check_invariants = true;   // inline structural checks (cheap)
    bool track_domination = false;  // inline Prop-3.4-style per-step verification
};

struct CouplingStepEvent {
    int t;
    LocalMap map;
    int d_size;
    int temp_size;
};

struct DominationViolation {
    int t = 0;
    int v = 0;
    std::string what;
};

struct CouplingResult {
    bool bc_true = false;
    BcFailure bc_failure = BcFailure::None;
    UpdateSequence sigma_prime;
    std::vector<CouplingStepEvent> events;        // steps with v_t in B_1(D_{t-1})
    std::vector<int> nm_applied;                  // times
    std::vector<std::pair<int, int>> nm_failed;   // (time, failed bullet)
    std::vector<std::pair<int, int>> d_enter;     // (time, vertex); includes (0, z*)
    std::vector<std::pair<int, int>> d_leave;
    std::vector<std::pair<int, int>> temp_added;  // (time, vertex) per NM application
    std::vector<int> d_final;                     // ascending
    std::vector<int> p_final;
    std::vector<int> temp_union;                  // ascending
    int case3a_count = 0;
    int sigma_divergence_count = 0;  // danger steps whose time-t color was pre-edited
    int max_d = 1;
    Labeling x_final;  // x0 evolved under sigma
    Labeling y_final;  // y0 evolved under sigma_prime
    std::vector<DominationViolation> domination_violations;  // when tracked
};

// The global coupling F: pass 1 runs the bounding chain on (x0, y0, sigma);
// if BC fails the result is the identity coupling, otherwise the local maps
// are composed time by time.  Inputs must differ at exactly one vertex.
CouplingResult global_coupling(const Graph& g, const Labeling& x0, const Labeling& y0,
                               const UpdateSequence& sigma, const CouplingConfig& cfg = {});

// F_{y0,x0}(F_{x0,y0}(sigma)) == sigma, coordinate for coordinate.
bool reverse_check(const Graph& g, const Labeling& x0, const Labeling& y0,
                   const UpdateSequence& sigma, const CouplingConfig& cfg = {});

std::string coupling_result_to_json(const CouplingResult& r);

}  // namespace glauber
