#include "semmem/grammar.hpp"

#include <cmath>
#include <random>

#include "semmem/numeric.hpp"

namespace semmem {

Grammar init_grammar(int n, int v, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("grammar needs at least one nonterminal");
    if (v < 1) throw ArgumentError("grammar needs at least one terminal");

    Grammar g;
    g.n = n;
    g.v = v;
    g.seed = seed;
    g.binary.resize(static_cast<size_t>(n) * n * n);
    g.emissions.resize(static_cast<size_t>(n) * v);

    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double raw = 1.0 + 0.1 * (2.0 * unit_uniform(rng()) - 1.0);
                g.binary[(static_cast<size_t>(i) * n + j) * n + k] = raw;
                total += raw;
            }
        }
        for (int t = 0; t < v; ++t) {
            const double raw = 1.0 + 0.1 * (2.0 * unit_uniform(rng()) - 1.0);
            g.emissions[static_cast<size_t>(i) * v + t] = raw;
            total += raw;
        }
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                g.binary[(static_cast<size_t>(i) * n + j) * n + k] /= total;
            }
        }
        for (int t = 0; t < v; ++t) {
            g.emissions[static_cast<size_t>(i) * v + t] /= total;
        }
    }
    return g;
}

double max_normalization_error(const Grammar& g) {
    double worst = 0.0;
    for (int i = 0; i < g.n; ++i) {
        double total = 0.0;
        for (int j = 0; j < g.n; ++j) {
            for (int k = 0; k < g.n; ++k) {
                total += g.rule(i, j, k);
            }
        }
        for (int t = 0; t < g.v; ++t) {
            total += g.emission(i, t);
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

double set_association(const std::vector<int>& p_cover, const std::vector<int>& q_cover,
                       const AssociationMatrix& assoc) {
    if (p_cover.empty() || q_cover.empty()) {
        throw ArgumentError("cover sets must be nonempty");
    }
    if (assoc.empty()) return 1.0;
    double total = 0.0;
    for (int p : p_cover) {
        for (int q : q_cover) {
            total += assoc.at(p, q);
        }
    }
    return total / (static_cast<double>(p_cover.size()) * static_cast<double>(q_cover.size()));
}

double modulated_rule_prob(const Grammar& g, int i, int j, int k,
                           const std::vector<int>& p_cover,
                           const std::vector<int>& q_cover,
                           const AssociationMatrix& assoc) {
    if (i < 0 || i >= g.n || j < 0 || j >= g.n || k < 0 || k >= g.n) {
        throw ArgumentError("nonterminal index out of range");
    }
    return g.rule(i, j, k) * set_association(p_cover, q_cover, assoc);
}

}  // namespace semmem
