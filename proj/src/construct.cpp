#include "graceful/construct.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "graceful/oracle.hpp"

namespace graceful {

AttachmentPlan constant_plan(const Tree& s, int x, int skip) {
    AttachmentPlan p;
    for (auto e : s.edges())
        if (e.first != skip && e.second != skip) p.at[e] = x;
    return p;
}

Bipartition bipartition_with_in_a(const Tree& t, int v) {
    if (v < 0 || v >= t.order()) throw Error("vertex " + std::to_string(v) + " out of range");
    auto bp = bipartition(t);
    if (bp.side[static_cast<std::size_t>(v)] == 1) {
        std::swap(bp.class_a, bp.class_b);
        for (auto& s : bp.side) s = 1 - s;
    }
    return bp;
}

namespace {

void check_bipartition(const Tree& t, const Bipartition& bp) {
    if (static_cast<int>(bp.side.size()) != t.order())
        throw Error("bipartition size mismatch");
    if (static_cast<int>(bp.class_a.size() + bp.class_b.size()) != t.order())
        throw Error("bipartition classes do not cover the tree");
    for (int s : bp.side)
        if (s != 0 && s != 1) throw Error("bipartition side values must be 0 or 1");
    for (auto [u, v] : t.edges())
        if (bp.side[static_cast<std::size_t>(u)] == bp.side[static_cast<std::size_t>(v)])
            throw Error("bipartition is not a proper 2-coloring");
}

void check_plan_entries(const CompositionInput& in) {
    for (auto& [e, x] : in.plan.at) {
        if (!in.S.has_edge(e.first, e.second))
            throw Error("attachment plan references a non-edge of S (" +
                        std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
        if (x < 0 || x >= in.T.order())
            throw Error("attachment plan vertex " + std::to_string(x) + " out of range");
    }
}

}  // namespace

CompositionResult delta(const CompositionInput& in) {
    if (!verify_graceful(in.S, in.f).ok) throw Error("S labeling is not graceful");
    if (!verify_graceful(in.T, in.g).ok) throw Error("T labeling is not graceful");
    check_bipartition(in.T, in.bipT);
    check_plan_entries(in);
    const int nS = in.S.order(), nT = in.T.order();
    for (auto e : in.S.edges())
        if (!in.plan.at.count(e))
            throw Error("attachment plan misses S-edge (" + std::to_string(e.first) + ", " +
                        std::to_string(e.second) + ")");

    CompositionResult out;
    out.copy_vertex.assign(static_cast<std::size_t>(nS), {});
    int next = 0;
    for (int s = 0; s < nS; ++s) {
        auto& row = out.copy_vertex[static_cast<std::size_t>(s)];
        row.resize(static_cast<std::size_t>(nT));
        for (int x = 0; x < nT; ++x) row[static_cast<std::size_t>(x)] = next++;
    }
    const int n = nS * nT;
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int s = 0; s < nS; ++s) {
        const int i = in.f(s);
        const auto& row = out.copy_vertex[static_cast<std::size_t>(s)];
        for (int x = 0; x < nT; ++x) {
            const int base = in.bipT.side[static_cast<std::size_t>(x)] == 0 ? i : nS - 1 - i;
            labels[static_cast<std::size_t>(row[static_cast<std::size_t>(x)])] = base * nT + in.g(x);
        }
        for (auto [a, b] : in.T.edges())
            edges.push_back(make_edge(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]));
    }
    for (auto e : in.S.edges()) {
        const int x = in.plan.at.at(e);
        edges.push_back(make_edge(out.copy_vertex[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(x)],
                                  out.copy_vertex[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(x)]));
    }
    out.tree = Tree(n, std::move(edges));
    out.labels = Labeling(std::move(labels));
    if (out.tree.order() != nS * nT) throw Error("internal error: composed order mismatch");
    if (!verify_graceful(out.tree, out.labels).ok)
        throw Error("internal error: composed labeling failed verification");
    return out;
}

CompositionResult delta_plus_one(const CompositionInput& in) {
    if (!verify_graceful(in.S, in.f).ok) throw Error("S labeling is not graceful");
    if (!verify_graceful(in.T, in.g).ok) throw Error("T labeling is not graceful");
    check_bipartition(in.T, in.bipT);
    check_plan_entries(in);
    const int nS = in.S.order(), nT = in.T.order();
    if (in.u < 0 || in.u >= nS) throw Error("exceptional vertex out of range");
    if (in.v < 0 || in.v >= nT) throw Error("fixed vertex out of range");
    if (in.f(in.u) != nS - 1)
        throw Error("exceptional vertex must carry label " + std::to_string(nS - 1) + " in S");
    if (in.g(in.v) != 0) throw Error("fixed vertex must carry label 0 in T");
    if (in.bipT.side[static_cast<std::size_t>(in.v)] != 0)
        throw Error("fixed vertex must lie in class A of T");
    for (auto e : in.S.edges()) {
        const bool incident = e.first == in.u || e.second == in.u;
        if (incident && in.plan.at.count(e))
            throw Error("attachment plan assigns an edge incident to the exceptional vertex");
        if (!incident && !in.plan.at.count(e))
            throw Error("attachment plan misses S-edge (" + std::to_string(e.first) + ", " +
                        std::to_string(e.second) + ")");
    }

    CompositionResult out;
    out.copy_vertex.assign(static_cast<std::size_t>(nS), {});
    int next = 0;
    for (int s = 0; s < nS; ++s) {
        if (s == in.u) continue;
        auto& row = out.copy_vertex[static_cast<std::size_t>(s)];
        row.resize(static_cast<std::size_t>(nT));
        for (int x = 0; x < nT; ++x) row[static_cast<std::size_t>(x)] = next++;
    }
    out.exceptional = next;
    const int n = (nS - 1) * nT + 1;
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    labels[static_cast<std::size_t>(out.exceptional)] = (nS - 1) * nT;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int s = 0; s < nS; ++s) {
        if (s == in.u) continue;
        const int i = in.f(s);
        const auto& row = out.copy_vertex[static_cast<std::size_t>(s)];
        for (int x = 0; x < nT; ++x) {
            const int base = in.bipT.side[static_cast<std::size_t>(x)] == 0 ? i : nS - 2 - i;
            labels[static_cast<std::size_t>(row[static_cast<std::size_t>(x)])] = base * nT + in.g(x);
        }
        for (auto [a, b] : in.T.edges())
            edges.push_back(make_edge(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b)]));
    }
    for (auto e : in.S.edges()) {
        if (e.first == in.u || e.second == in.u) {
            const int other = e.first == in.u ? e.second : e.first;
            edges.push_back(make_edge(
                out.exceptional,
                out.copy_vertex[static_cast<std::size_t>(other)][static_cast<std::size_t>(in.v)]));
        } else {
            const int x = in.plan.at.at(e);
            edges.push_back(
                make_edge(out.copy_vertex[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(x)],
                          out.copy_vertex[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(x)]));
        }
    }
    out.tree = Tree(n, std::move(edges));
    out.labels = Labeling(std::move(labels));
    if (out.tree.order() != (nS - 1) * nT + 1) throw Error("internal error: composed order mismatch");
    if (!verify_graceful(out.tree, out.labels).ok)
        throw Error("internal error: composed labeling failed verification");
    return out;
}

namespace {

// Breadth-first propagation of pair roles over the contree: crossing an
// edge with origin {p,q}, q inherits p's slot. Each vertex is reached once,
// so no conflicting assignment can arise.
RoleAssignment propagate_roles(const ContractionMap& cmap, int root, std::array<int, 2> seed) {
    const int nc = cmap.contree.order();
    RoleAssignment ra;
    ra.roles.assign(static_cast<std::size_t>(nc), {-1, -1});
    ra.roles[static_cast<std::size_t>(root)] = seed;
    std::vector<char> done(static_cast<std::size_t>(nc), 0);
    done[static_cast<std::size_t>(root)] = 1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
        const int x = bfs.front();
        bfs.pop();
        for (int y : cmap.contree.neighbors(x)) {
            if (done[static_cast<std::size_t>(y)]) continue;
            done[static_cast<std::size_t>(y)] = 1;
            auto oe = cmap.origin_edge.at(make_edge(x, y));
            int p = oe.first, q = oe.second;
            if (cmap.image[static_cast<std::size_t>(p)] != x) std::swap(p, q);
            const auto& rx = ra.roles[static_cast<std::size_t>(x)];
            const int slot = rx[0] == p ? 0 : (rx[1] == p ? 1 : -1);
            if (slot < 0) throw Error("internal error: role propagation lost a vertex");
            int mate = -1;
            for (int w : cmap.pair_of[static_cast<std::size_t>(y)])
                if (w != q) mate = w;
            ra.roles[static_cast<std::size_t>(y)][static_cast<std::size_t>(slot)] = q;
            ra.roles[static_cast<std::size_t>(y)][static_cast<std::size_t>(1 - slot)] = mate;
            bfs.push(y);
        }
    }
    return ra;
}

}  // namespace

RoleAssignment assign_roles(const ContractionMap& cmap, int u) {
    if (u < 0 || u >= static_cast<int>(cmap.image.size()))
        throw Error("vertex " + std::to_string(u) + " out of range");
    const int cu = cmap.image[static_cast<std::size_t>(u)];
    const auto& group = cmap.pair_of[static_cast<std::size_t>(cu)];
    if (group.size() != 1 || group[0] != u)
        throw Error("vertex " + std::to_string(u) + " is not uncovered by the contraction");
    for (int c = 0; c < cmap.contree.order(); ++c)
        if (c != cu && cmap.pair_of[static_cast<std::size_t>(c)].size() != 2)
            throw Error("contraction is not from an almost perfect matching");
    if (cmap.contree.order() > 1 && cmap.contree.degree(cu) != 1)
        throw Error("uncovered vertex " + std::to_string(u) + " is not a leaf");
    return propagate_roles(cmap, cu, {u, -1});
}

Labeling rosa_caterpillar(const Tree& t, int start) {
    auto cls = classify(t);
    if (cls.kind != TreeKind::Path && cls.kind != TreeKind::Caterpillar)
        throw Error("not a path or caterpillar (" + to_string(cls.kind) + ")");
    const int n = t.order();
    if (start < 0 || start >= n) throw Error("start vertex " + std::to_string(start) + " out of range");
    if (n == 1) return Labeling({0});
    if (eccentricity(t, start) != diameter(t))
        throw Error("start vertex " + std::to_string(start) +
                    " is not an endpoint of a maximum-length path");

    auto spine = longest_path_from(t, start);
    std::vector<char> on_spine(static_cast<std::size_t>(n), 0);
    for (int v : spine) on_spine[static_cast<std::size_t>(v)] = 1;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(spine[0]);
    for (std::size_t i = 1; i < spine.size(); ++i) {
        for (int w : t.neighbors(spine[i]))  // ascending ids
            if (!on_spine[static_cast<std::size_t>(w)]) order.push_back(w);
        order.push_back(spine[i]);
    }
    if (static_cast<int>(order.size()) != n)
        throw Error("internal error: spine does not dominate the tree");

    auto bp = bipartition(t);
    const int start_side = bp.side[static_cast<std::size_t>(start)];
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int lo = 0, hi = n - 1;
    for (int v : order)
        labels[static_cast<std::size_t>(v)] =
            bp.side[static_cast<std::size_t>(v)] == start_side ? lo++ : hi--;
    Labeling f(std::move(labels));
    if (!verify_graceful(t, f).ok)
        throw Error("internal error: caterpillar labeling failed verification");
    return f;
}

namespace {

struct Expansion {
    Labeling labels;
    std::vector<Edge> reconstructed;
};

// Pull composed labels back onto the original vertices. Slots double as
// vertex ids of the single-edge copy, so roles give the bijection directly.
Expansion expand_with_edge(const Tree& t, const ContractionMap& cmap, const RoleAssignment& ra,
                           const CompositionResult& comp, int exceptional_orig) {
    const int n = t.order();
    std::vector<int> composed_of(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < cmap.contree.order(); ++c) {
        for (int slot = 0; slot < 2; ++slot) {
            const int orig = ra.roles[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot)];
            if (orig < 0) continue;
            if (orig == exceptional_orig)
                composed_of[static_cast<std::size_t>(orig)] = comp.exceptional;
            else
                composed_of[static_cast<std::size_t>(orig)] =
                    comp.copy_vertex[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot)];
        }
    }
    std::vector<int> orig_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int cv = composed_of[static_cast<std::size_t>(v)];
        if (cv < 0 || cv >= n) throw Error("internal error: expansion map incomplete");
        if (orig_of[static_cast<std::size_t>(cv)] >= 0)
            throw Error("internal error: expansion map is not injective");
        orig_of[static_cast<std::size_t>(cv)] = v;
    }
    Expansion out;
    out.labels.values.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        out.labels.values[static_cast<std::size_t>(v)] =
            comp.labels(composed_of[static_cast<std::size_t>(v)]);
    out.reconstructed.reserve(comp.tree.edges().size());
    for (auto [a, b] : comp.tree.edges())
        out.reconstructed.push_back(
            make_edge(orig_of[static_cast<std::size_t>(a)], orig_of[static_cast<std::size_t>(b)]));
    std::sort(out.reconstructed.begin(), out.reconstructed.end());
    return out;
}

// Attachment slot of a contree edge: the common role slot of the origin
// endpoints. Propagation makes the two slots agree; checked anyway.
int plan_slot(const ContractionMap& cmap, const RoleAssignment& ra, Edge ce) {
    auto oe = cmap.origin_edge.at(ce);
    const int p = oe.first, q = oe.second;
    const auto& rp = ra.roles[static_cast<std::size_t>(cmap.image[static_cast<std::size_t>(p)])];
    const auto& rq = ra.roles[static_cast<std::size_t>(cmap.image[static_cast<std::size_t>(q)])];
    const int sp = rp[0] == p ? 0 : (rp[1] == p ? 1 : -1);
    const int sq = rq[0] == q ? 0 : (rq[1] == q ? 1 : -1);
    if (sp < 0 || sp != sq) throw Error("internal error: inconsistent roles across a contree edge");
    return sp;
}

}  // namespace

ApmLabelingResult label_lobster_apm(const Tree& t) {
    const int n = t.order();
    if (n == 1) return ApmLabelingResult{Labeling({0}), 0, Matching{}, contract(t, Matching{}), {}};
    if (n % 2 == 0) throw Error("no almost perfect matching: order " + std::to_string(n) + " is even");

    // The uncovered vertex is not free to choose: a maximum-length path
    // endpoint can be blocked (a pendant vertex near the path forces a
    // matching edge that strands the endpoint's neighbor), and some trees
    // admit missing matchings only away from every such endpoint. Try
    // endpoints first, then the remaining vertices, and keep the first
    // whose contraction is a caterpillar with the vertex's image a contree
    // leaf. Prefer images at the end of a maximum-length contree path,
    // where the constructive caterpillar labeling can start; when no
    // candidate offers that (two short legs sharing a spine vertex force
    // the miss into a leg), fall back to searching the contree for a
    // graceful labeling with label 0 on the image.
    const int d = diameter(t);
    std::vector<int> candidates;
    for (int cand = 0; cand < n; ++cand)
        if (eccentricity(t, cand) == d) candidates.push_back(cand);
    for (int cand = 0; cand < n; ++cand)
        if (eccentricity(t, cand) != d) candidates.push_back(cand);

    int u = -1;
    bool any_missing = false;
    Matching m;
    ContractionMap cmap;
    Labeling h;
    std::vector<std::tuple<int, Matching, ContractionMap>> deferred;
    for (int cand : candidates) {
        if (!admits_matching_missing(t, cand)) continue;
        any_missing = true;
        Matching mc = matching_missing(t, cand);
        ContractionMap cm = contract(t, mc);
        auto cls = classify(cm.contree);
        if (cls.kind != TreeKind::Path && cls.kind != TreeKind::Caterpillar) continue;
        const int img = cm.image[static_cast<std::size_t>(cand)];
        // Role propagation seeds at the image, which must be a contree leaf.
        if (cm.contree.degree(img) != 1) continue;
        if (eccentricity(cm.contree, img) == diameter(cm.contree)) {
            u = cand;
            m = std::move(mc);
            cmap = std::move(cm);
            h = complement(rosa_caterpillar(cmap.contree, img));
            break;
        }
        deferred.emplace_back(cand, std::move(mc), std::move(cm));
    }
    if (u < 0) {
        for (auto& [cand, mc, cm] : deferred) {
            SearchOptions so;
            so.mode = SearchMode::First;
            so.zero_at = cm.image[static_cast<std::size_t>(cand)];
            so.node_budget = 1'000'000;
            try {
                auto found = brute_force(cm.contree, so);
                if (found.labelings.empty()) continue;
                u = cand;
                m = std::move(mc);
                cmap = std::move(cm);
                h = complement(found.labelings[0]);
                break;
            } catch (const Error&) {
                continue;
            }
        }
    }
    if (u < 0) {
        if (!any_missing) throw Error("no almost perfect matching misses any vertex");
        if (deferred.empty()) throw Error("no uncovered vertex yields a caterpillar contraction");
        throw Error("no graceful contree labeling puts label 0 at the uncovered vertex");
    }
    const Tree& ct = cmap.contree;
    const int cu = cmap.image[static_cast<std::size_t>(u)];
    if (h(cu) != ct.order() - 1)
        throw Error("internal error: contree labeling misses the top label at the image");
    RoleAssignment ra = assign_roles(cmap, u);

    CompositionInput ci;
    ci.S = ct;
    ci.f = h;
    ci.T = Tree::path(2);
    ci.g = Labeling({0, 1});
    ci.bipT = bipartition(ci.T);
    ci.u = cu;
    ci.v = 0;
    for (auto e : ct.edges()) {
        if (e.first == cu || e.second == cu) continue;
        ci.plan.at[e] = plan_slot(cmap, ra, e);
    }
    CompositionResult comp = delta_plus_one(ci);

    auto ex = expand_with_edge(t, cmap, ra, comp, u);
    if (ex.reconstructed != t.edges())
        throw Error("internal error: expansion does not reproduce the input edge set");
    if (!verify_graceful(t, ex.labels).ok)
        throw Error("internal error: expanded labeling is not graceful");
    if (ex.labels(u) != n - 1)
        throw Error("internal error: uncovered vertex does not carry the top label");
    return ApmLabelingResult{std::move(ex.labels), u, std::move(m), std::move(cmap),
                             std::move(ex.reconstructed)};
}

PmLabelingResult label_tree_pm_strong(const Tree& t) {
    const int n = t.order();
    if (n % 2 != 0) throw Error("no perfect matching: order " + std::to_string(n) + " is odd");
    Matching m = max_matching(t);
    if (2 * m.size() != n)
        throw Error("no perfect matching: maximum matching covers only " +
                    std::to_string(2 * m.size()) + " of " + std::to_string(n) + " vertices");
    ContractionMap cmap = contract(t, m);
    const Tree& ct = cmap.contree;

    auto cls = classify(ct);
    if (cls.kind != TreeKind::Path && cls.kind != TreeKind::Caterpillar)
        throw Error("contree is not a caterpillar (" + to_string(cls.kind) + ")");

    Labeling f = rosa_caterpillar(ct, smallest_longest_path_endpoint(ct));
    const auto& seed_pair = cmap.pair_of[0];
    RoleAssignment ra = propagate_roles(cmap, 0, {seed_pair[0], seed_pair[1]});

    CompositionInput ci;
    ci.S = ct;
    ci.f = f;
    ci.T = Tree::path(2);
    ci.g = Labeling({0, 1});
    ci.bipT = bipartition(ci.T);
    for (auto e : ct.edges()) ci.plan.at[e] = plan_slot(cmap, ra, e);
    CompositionResult comp = delta(ci);

    auto ex = expand_with_edge(t, cmap, ra, comp, -1);
    if (ex.reconstructed != t.edges())
        throw Error("internal error: expansion does not reproduce the input edge set");
    if (!verify_strongly_graceful(t, ex.labels, m).ok)
        throw Error("internal error: expanded labeling is not strongly graceful");
    return PmLabelingResult{std::move(ex.labels), std::move(m), std::move(cmap),
                            std::move(ex.reconstructed)};
}

}  // namespace graceful
