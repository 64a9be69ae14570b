#pragma once

#include <set>
#include <vector>

#include "hpt/solvers.hpp"

namespace hpt::gadgets {

// Semantic colors inside reduction outputs.
inline constexpr int kTrue = 1;
inline constexpr int kFalse = 2;
inline constexpr int dummy_color(int cls) { return 2 + cls; }  // cls in 1..k-2

enum class GadgetKind { Equality, Inequality, NotDummy, Clause };

// Hands out auxiliary vertices: the T/F/D pools (fixed-size, cursor-driven)
// and the open-ended V_add range. V_add ids are never reused; D cursors wrap
// round-robin with a per-vertex use cap.
class AuxAllocator {
public:
    // Pools live at [first_pool_id, first_pool_id + k*pool_size): T, F, then
    // the k-2 dummy classes. V_add starts right after.
    AuxAllocator(int k, int pool_size, int first_pool_id, int d_use_cap = 4);

    int k() const { return k_; }
    int pool_size() const { return pool_size_; }

    int t_id(int i) const;             // i in 1..pool_size
    int f_id(int i) const;
    int d_id(int cls, int i) const;    // cls in 1..k-2
    int vadd_base() const { return vadd_base_; }
    int vadd_used() const { return vadd_next_; }
    int t_used() const { return t_cursor_; }
    int f_used() const { return f_cursor_; }
    int d_cursor(int cls) const;

    std::vector<int> fresh_vadd(int count);
    std::vector<int> take_t(int count);  // sequential, CapacityError on exhaustion
    std::vector<int> take_f(int count);
    std::vector<int> take_d(int cls, int count);  // wraps round-robin

    // Jumps the cursors to a precomputed state (lazy re-emission of a single
    // gadget); per-vertex reuse caps are not tracked from here.
    void position(int t_cursor, int f_cursor, const std::vector<int>& d_cursors, int vadd_next);

    // Family color of a pool vertex (kTrue/kFalse/dummy), or 0 for non-pool.
    int family_color(int v) const;

private:
    int k_;
    int pool_size_;
    int first_pool_id_;
    int vadd_base_;
    int d_use_cap_;
    int t_cursor_ = 0;
    int f_cursor_ = 0;
    int vadd_next_ = 0;
    std::vector<int> d_cursor_;
    std::vector<std::vector<int>> d_use_count_;
};

struct GadgetInstance {
    GadgetKind kind;
    std::vector<int> anchors;
    std::vector<int> aux;       // V_add ids, in emission order
    std::vector<int> pool_used; // pool ids referenced by the hyperedges
    std::vector<std::vector<int>> hyperedges;
};

// All k-subsets of {u, v, k^2-k-1 fresh aux} not containing both u and v;
// forces color(u) == color(v) in any weak k-coloring.
GadgetInstance equality_gadget(int u, int v, AuxAllocator& alloc, int k);

// Designated aux tied to each anchor by equality gadgets plus the two
// skeleton hyperedges {u, u_1..u_{k-2}, v} and {u, v_1..v_{k-2}, v};
// forces color(u) != color(v).
GadgetInstance inequality_gadget(int u, int v, AuxAllocator& alloc, int k);

// One hyperedge per dummy class: u plus k-1 same-class pool dummies;
// with the pools on their family colors, forces u into {True, False}.
GadgetInstance not_dummy_gadget(int u, AuxAllocator& alloc, int k);

// copies = two copy vertices per literal of a 3-clause (x1,x2,y1,y2,z1,z2).
// With pools on family colors and copy pairs equal, blocks exactly the
// all-False assignment of the three literals.
GadgetInstance clause_gadget(const std::vector<int>& copies, AuxAllocator& alloc, int k);

// Deterministic auxiliary coloring extending the anchor/pool colors;
// writes only positions of gadget aux (colors indexed by vertex id, 0 free).
void extend_coloring(const GadgetInstance& g, int k, std::vector<int>& colors_by_id);

// Anchor-projection semantics of a gadget closure.
struct ForcingProblem {
    std::vector<std::vector<int>> edges;
    std::vector<int> anchors;
    std::vector<std::pair<int, int>> fixed;  // (vertex, color), e.g. pools
    int lambda;
};

ForcingProblem forcing_problem(const GadgetInstance& g, const AuxAllocator& alloc);

// True iff the fixed partial coloring extends to a valid weak coloring of the
// closure (complete search over the free vertices).
bool extension_exists(const std::vector<std::vector<int>>& edges,
                      const std::vector<std::pair<int, int>>& fixed, int lambda,
                      const solvers::SearchLimits& limits = {});

// Set of anchor color tuples extendable to a valid weak coloring of the
// closure; complete backtracking per tuple.
std::set<std::vector<int>> anchor_relation(const ForcingProblem& p,
                                           const solvers::SearchLimits& limits = {});

bool verify_forcing(const ForcingProblem& p, const std::set<std::vector<int>>& expected,
                    const solvers::SearchLimits& limits = {});

// Expected relations for the gadget property suite.
std::set<std::vector<int>> equal_pair_relation(int lambda);
std::set<std::vector<int>> unequal_pair_relation(int lambda);

}  // namespace hpt::gadgets
