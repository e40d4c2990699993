#pragma once

#include <string>
#include <vector>

#include "semmem/grammar.hpp"

namespace semmem {

// One training instance: a nonempty terminal sequence (1-based codes)
// plus the association matrix of its source time step. An empty matrix
// means unit modulation (the plain inside-outside algorithm). The tag is
// used to name the instance in error messages.
struct EmItem {
    std::vector<int> terminals;
    AssociationMatrix assoc;
    std::string tag;
};

struct EmOptions {
    int l_max = 8;
    // With deterministic accumulation, expected counts are reduced in
    // batch order and the result is independent of the thread count.
    // Otherwise counts are reduced per thread, which is faster on large
    // batches but ties the bits of the result to the thread count.
    bool deterministic = true;
    int threads = 0;  // 0 = OpenMP default
};

struct EmStepResult {
    Grammar grammar;
    double log_likelihood = 0.0;  // of the batch under the INPUT grammar
};

// One perceptual-EM iteration: inside/outside charts with every binary
// rule application weighted by the set-wise association of its child
// covers, followed by the M-step re-estimation. OpenMP-parallel across
// batch items.
EmStepResult inside_outside_step(const Grammar& g, const std::vector<EmItem>& batch,
                                 const EmOptions& options = {});

// Modulated log inside probability of a single sequence; kLogZero when
// the sequence has no parse.
double log_inside_probability(const Grammar& g, const std::vector<int>& terminals,
                              const AssociationMatrix& assoc);

struct EmRunResult {
    Grammar grammar;
    double final_log_likelihood = 0.0;
    int iterations = 0;
};

// Iterates inside_outside_step until the relative log-likelihood
// improvement drops below tol or max_iters is reached.
EmRunResult run_em(Grammar g, const std::vector<EmItem>& batch, int max_iters, double tol,
                   const EmOptions& options = {});

namespace reference {

// Serial textbook implementation kept as an independent check of the
// OpenMP kernel; both follow the same accumulation order and must agree
// bit for bit.
EmStepResult inside_outside_step(const Grammar& g, const std::vector<EmItem>& batch,
                                 int l_max = 8);

}  // namespace reference

}  // namespace semmem
