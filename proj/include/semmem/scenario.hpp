#pragma once

#include <string>
#include <vector>

#include "semmem/errors.hpp"

namespace semmem {

enum class ElementKind { SelfState, MovingAgent, StaticSign };

ElementKind element_kind_from_string(const std::string& s);
std::string to_string(ElementKind kind);

// One vocabulary entry of a scenario. Codes are unique and contiguous
// from 1 within a scenario.
struct ContextElement {
    int code = 0;
    ElementKind kind = ElementKind::SelfState;
    std::string description;
};

// A context element observed in one time step with its longitudinal (dy)
// and lateral (dx) distance to the self-car, in meters. Self-state and
// static-sign observations sit at the origin.
struct Observation {
    int code = 0;
    double dy = 0.0;
    double dx = 0.0;
};

// A snapshot of the active context elements in the scene.
struct TimeStep {
    int index = 0;
    double dt = 0.0;
    std::vector<Observation> observations;
};

struct Episode {
    std::string id;
    std::string scenario_id;
    double dt = 0.1;
    std::vector<TimeStep> steps;
};

// A named set of moving-agent codes sharing a driving lane. Groups
// partition the moving-agent codes of a scenario.
struct LaneGroup {
    std::string name;
    std::vector<int> codes;
};

struct Scenario {
    std::string id;
    std::vector<ContextElement> vocabulary;
    std::vector<LaneGroup> lane_groups;
    std::vector<Episode> episodes;

    const ContextElement* find_element(int code) const;
};

// Symmetric pairwise association weights between context elements for one
// time step, indexed by 1-based code. Entries are in [0, 1] and nonzero
// only for pairs of elements active in the source step. A default-built
// (empty) matrix stands for unit modulation.
class AssociationMatrix {
  public:
    AssociationMatrix() = default;
    explicit AssociationMatrix(int vocab_size);

    int vocab_size() const { return size_; }
    bool empty() const { return size_ == 0; }
    double at(int p, int q) const;
    void set(int p, int q, double value);
    const std::vector<double>& values() const { return values_; }

  private:
    int size_ = 0;
    std::vector<double> values_;
};

// Loads and fully validates a scenario fixture file. Throws FileParseError
// on malformed syntax or schema, ValidationError on invariant violations.
Scenario load_scenario(const std::string& path);

// Presence-gated exponential distance kernel: for active elements p, q,
// entry = exp(-(|dy_p - dy_q| + |dx_p - dx_q|) / lambda), with self-pairs
// fixed at 1. Inactive rows and columns are zero.
AssociationMatrix build_association_matrix(const TimeStep& step, int vocab_size,
                                           double lambda);

// Expands a time step with several agents per lane group into the list of
// reduced steps that keep exactly one moving agent per represented group.
// Output order is deterministic: group order, then code order, with the
// first group varying slowest. A step with no moving agents yields a
// single reduced step equal to the input.
std::vector<TimeStep> enumerate_combinations(const TimeStep& step,
                                             const std::vector<LaneGroup>& lane_groups);

// Active codes of a step sorted ascending; the canonical terminal
// sequence handed to the parser.
std::vector<int> sorted_active_codes(const TimeStep& step);

}  // namespace semmem
