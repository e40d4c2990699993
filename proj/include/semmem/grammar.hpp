#pragma once

#include <cstdint>
#include <vector>

#include "semmem/scenario.hpp"

namespace semmem {

// A grammar in Chomsky normal form: binary rules a(i, j, k) over
// nonterminals plus terminal emissions e(i, t). Rows are normalized per
// nonterminal i: sum_{j,k} a(i,j,k) + sum_t e(i,t) = 1. Nonterminal and
// terminal indices are 0-based here; terminal t corresponds to context
// code t + 1. The start nonterminal is fixed at index 0.
struct Grammar {
    int n = 0;
    int v = 0;
    std::uint64_t seed = 0;
    std::vector<double> binary;     // n*n*n, row-major [i][j][k]
    std::vector<double> emissions;  // n*v, row-major [i][t]

    static constexpr int kStart = 0;

    double rule(int i, int j, int k) const {
        return binary[(static_cast<size_t>(i) * n + j) * n + k];
    }
    double emission(int i, int t) const {
        return emissions[static_cast<size_t>(i) * v + t];
    }
};

// Random near-uniform initialization: every entry is drawn from a stream
// determined solely by the seed, perturbed away from uniform by at most
// 10%, then normalized per nonterminal. Same (n, v, seed) gives a
// bit-identical grammar.
Grammar init_grammar(int n, int v, std::uint64_t seed);

// Largest per-nonterminal deviation of rule mass from 1.
double max_normalization_error(const Grammar& g);

// Mean pairwise association between two cover sets (1-based codes).
// An empty matrix yields 1 (unit modulation).
double set_association(const std::vector<int>& p_cover, const std::vector<int>& q_cover,
                       const AssociationMatrix& assoc);

// Modulated rule probability a(i,j,k) * M(P, Q).
double modulated_rule_prob(const Grammar& g, int i, int j, int k,
                           const std::vector<int>& p_cover,
                           const std::vector<int>& q_cover,
                           const AssociationMatrix& assoc);

}  // namespace semmem
