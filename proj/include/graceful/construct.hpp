#pragma once

#include <array>
#include <map>
#include <vector>

#include "graceful/labeling.hpp"
#include "graceful/matching.hpp"
#include "graceful/tree.hpp"

namespace graceful {

// Per-edge choice of the copy vertex joining two adjacent copies. Keys are
// S-edges; values are T-vertices. Edges incident to an exceptional vertex
// are excluded: those always attach at the fixed vertex.
struct AttachmentPlan {
    std::map<Edge, int> at;
};

// Plan sending every S-edge (except those touching skip, if given) to x.
AttachmentPlan constant_plan(const Tree& s, int x, int skip = -1);

struct CompositionInput {
    Tree S;
    Labeling f;  // graceful labeling of S
    Tree T;
    Labeling g;        // graceful labeling of T
    Bipartition bipT;  // orientation of T's two classes; class_a drives the formulas
    AttachmentPlan plan;
    int u = -1;  // exceptional S-vertex (vertex replacement skipped); requires f(u) = n_S-1
    int v = -1;  // fixed T-vertex; requires g(v) = 0 and v in class_a
};

// Bipartition of t oriented so that v lands in class_a.
Bipartition bipartition_with_in_a(const Tree& t, int v);

struct CompositionResult {
    Tree tree;
    Labeling labels;
    // copy_vertex[s][x] = composed id of T-vertex x in the copy replacing
    // S-vertex s; row u is empty when u is exceptional
    std::vector<std::vector<int>> copy_vertex;
    int exceptional = -1;  // composed id of the kept vertex u, -1 for plain delta
};

// Vertex replacement: every S-vertex becomes a copy of T, adjacent copies
// joined at the plan's vertex. Copy labels follow the two-class offset
// formulas; the result is re-verified graceful before returning.
CompositionResult delta(const CompositionInput& in);

// Like delta, but the S-vertex u (labeled n_S-1) stays a single vertex,
// labeled (n_S-1)*n_T, attached to the fixed vertex v of adjacent copies.
CompositionResult delta_plus_one(const CompositionInput& in);

// For each contree vertex: which original vertex plays the fixed vertex
// (slot 0) and which plays the other end (slot 1, -1 for singletons).
struct RoleAssignment {
    std::vector<std::array<int, 2>> roles;
};

// Roles for a contraction of an almost perfect matching missing leaf u:
// u's neighbor takes slot 0 in its pair, the rest follows by breadth-first
// propagation along origin edges (each pair is reached exactly once).
RoleAssignment assign_roles(const ContractionMap& cmap, int u);

// Rosa's labeling of a path or caterpillar: value 0 at start, which must
// be an endpoint of a maximum-length path. Ascending values fill start's
// bipartition class along the spine order, descending fill the other.
Labeling rosa_caterpillar(const Tree& t, int start);

struct ApmLabelingResult {
    Labeling labels;
    int u = 0;  // the vertex carrying label n-1, left uncovered
    Matching matching;
    ContractionMap cmap;
    std::vector<Edge> reconstructed_edges;  // asserted equal to the input's
};

// Full pipeline for odd-order trees with an almost perfect matching and a
// caterpillar contree: contract, label the contree, expand with copies of
// a single edge. The uncovered vertex u is the first candidate (maximum-
// length path endpoints by id, then the remaining vertices by id) that
// some almost perfect matching misses and whose contraction stays a
// caterpillar with u's image a contree leaf; endpoints alone do not
// suffice. Images at the end of a maximum-length contree path get the
// constructive caterpillar labeling; otherwise the contree is searched
// for a graceful labeling with 0 on the image (budgeted, so very large
// contrees of that rare shape may be rejected). Output is verified
// graceful with labels[u] = n-1.
ApmLabelingResult label_lobster_apm(const Tree& t);

struct PmLabelingResult {
    Labeling labels;
    Matching matching;
    ContractionMap cmap;
    std::vector<Edge> reconstructed_edges;
};

// Analogue for even-order trees with a perfect matching and a caterpillar
// contree. Output is verified strongly graceful: matched pairs sum to n-1.
PmLabelingResult label_tree_pm_strong(const Tree& t);

}  // namespace graceful
