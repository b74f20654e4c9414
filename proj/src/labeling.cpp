#include "graceful/labeling.hpp"

#include <algorithm>
#include <numeric>

namespace graceful {

std::vector<int> edge_weights(const Tree& t, const Labeling& f) {
    if (f.order() != t.order())
        throw Error("labeling order mismatch: " + std::to_string(f.order()) + " labels for " +
                    std::to_string(t.order()) + " vertices");
    std::vector<int> w;
    w.reserve(t.edges().size());
    for (auto [u, v] : t.edges()) w.push_back(std::abs(f(u) - f(v)));
    std::sort(w.begin(), w.end());
    return w;
}

VerificationReport verify_graceful(const Tree& t, const Labeling& f) {
    VerificationReport r;
    if (f.order() != t.order()) {
        r.add("label out of range", "labeling has " + std::to_string(f.order()) +
                                        " values for " + std::to_string(t.order()) + " vertices");
        return r;
    }
    const int n = t.order();
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int l = f(v);
        if (l < 0 || l >= n) {
            r.add("label out of range",
                  "vertex " + std::to_string(v) + " has label " + std::to_string(l));
            continue;
        }
        if (seen[static_cast<std::size_t>(l)] >= 0)
            r.add("duplicate label", "label " + std::to_string(l) + " on vertices " +
                                         std::to_string(seen[static_cast<std::size_t>(l)]) +
                                         " and " + std::to_string(v));
        else
            seen[static_cast<std::size_t>(l)] = v;
    }
    if (!r.ok) return r;
    auto w = edge_weights(t, f);
    std::vector<int> want(w.size());
    std::iota(want.begin(), want.end(), 1);
    if (w != want) {
        std::string got = "{";
        for (std::size_t i = 0; i < w.size(); ++i) got += (i ? "," : "") + std::to_string(w[i]);
        got += "}";
        r.add("weight multiset mismatch", "weights " + got + " are not 1.." +
                                              std::to_string(t.order() - 1));
    }
    return r;
}

VerificationReport verify_strongly_graceful(const Tree& t, const Labeling& f, const Matching& m) {
    if (!is_matching(t, m)) throw Error("not a matching of the tree");
    if (2 * m.size() != t.order()) throw Error("matching is not perfect");
    auto r = verify_graceful(t, f);
    if (f.order() != t.order()) return r;
    const int want = t.order() - 1;
    for (auto [a, b] : m.pairs) {
        int s = f(a) + f(b);
        if (s != want)
            r.add("matched-pair sum mismatch", "pair (" + std::to_string(a) + ", " +
                                                   std::to_string(b) + ") sums to " +
                                                   std::to_string(s) + ", want " +
                                                   std::to_string(want));
    }
    return r;
}

Labeling complement(const Labeling& f) {
    const int n = f.order();
    Labeling out;
    out.values.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (f(v) < 0 || f(v) >= n)
            throw Error("label out of range: vertex " + std::to_string(v) + " has label " +
                        std::to_string(f(v)));
        out.values.push_back(n - 1 - f(v));
    }
    return out;
}

}  // namespace graceful
