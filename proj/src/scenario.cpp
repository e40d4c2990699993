#include "semmem/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace semmem {

using nlohmann::json;

ElementKind element_kind_from_string(const std::string& s) {
    if (s == "self-state") return ElementKind::SelfState;
    if (s == "moving-agent") return ElementKind::MovingAgent;
    if (s == "static-sign") return ElementKind::StaticSign;
    throw FileParseError("unknown element kind '" + s + "'");
}

std::string to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::SelfState: return "self-state";
        case ElementKind::MovingAgent: return "moving-agent";
        case ElementKind::StaticSign: return "static-sign";
    }
    return "?";
}

const ContextElement* Scenario::find_element(int code) const {
    for (const auto& el : vocabulary) {
        if (el.code == code) return &el;
    }
    return nullptr;
}

AssociationMatrix::AssociationMatrix(int vocab_size)
    : size_(vocab_size), values_(static_cast<size_t>(vocab_size) * vocab_size, 0.0) {}

double AssociationMatrix::at(int p, int q) const {
    if (p < 1 || p > size_ || q < 1 || q > size_) {
        throw ArgumentError("association matrix index out of range: (" +
                            std::to_string(p) + ", " + std::to_string(q) + ") for size " +
                            std::to_string(size_));
    }
    return values_[static_cast<size_t>(p - 1) * size_ + (q - 1)];
}

void AssociationMatrix::set(int p, int q, double value) {
    if (p < 1 || p > size_ || q < 1 || q > size_) {
        throw ArgumentError("association matrix index out of range: (" +
                            std::to_string(p) + ", " + std::to_string(q) + ") for size " +
                            std::to_string(size_));
    }
    values_[static_cast<size_t>(p - 1) * size_ + (q - 1)] = value;
}

namespace {

const json& require_field(const json& j, const char* field, const std::string& where) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw FileParseError(where + ": missing field '" + field + "'");
    }
    return *it;
}

int require_int(const json& j, const char* field, const std::string& where) {
    const json& x = require_field(j, field, where);
    if (!x.is_number_integer()) {
        throw FileParseError(where + ": field '" + field + "' must be an integer");
    }
    return x.get<int>();
}

double require_number(const json& j, const char* field, const std::string& where) {
    const json& x = require_field(j, field, where);
    if (!x.is_number()) {
        throw FileParseError(where + ": field '" + field + "' must be a number");
    }
    return x.get<double>();
}

std::string require_string(const json& j, const char* field, const std::string& where) {
    const json& x = require_field(j, field, where);
    if (!x.is_string()) {
        throw FileParseError(where + ": field '" + field + "' must be a string");
    }
    return x.get<std::string>();
}

const json& require_array(const json& j, const char* field, const std::string& where) {
    const json& x = require_field(j, field, where);
    if (!x.is_array()) {
        throw FileParseError(where + ": field '" + field + "' must be an array");
    }
    return x;
}

void validate_scenario(const Scenario& sc) {
    if (sc.vocabulary.empty()) {
        throw ValidationError("scenario '" + sc.id + "': empty vocabulary");
    }
    std::vector<int> codes;
    std::unordered_map<int, ElementKind> kind_of;
    for (const auto& el : sc.vocabulary) {
        codes.push_back(el.code);
        kind_of[el.code] = el.kind;
    }
    std::sort(codes.begin(), codes.end());
    for (size_t i = 0; i < codes.size(); ++i) {
        if (codes[i] != static_cast<int>(i) + 1) {
            throw ValidationError("scenario '" + sc.id +
                                  "': vocabulary codes must be unique and contiguous from 1");
        }
    }

    // Lane groups must partition the moving-agent codes.
    std::set<int> moving;
    for (const auto& el : sc.vocabulary) {
        if (el.kind == ElementKind::MovingAgent) moving.insert(el.code);
    }
    std::set<int> grouped;
    for (const auto& g : sc.lane_groups) {
        for (int c : g.codes) {
            if (!kind_of.count(c)) {
                throw ValidationError("scenario '" + sc.id + "': lane group '" + g.name +
                                      "' references unknown code " + std::to_string(c));
            }
            if (kind_of[c] != ElementKind::MovingAgent) {
                throw ValidationError("scenario '" + sc.id + "': lane group '" + g.name +
                                      "' contains non-moving code " + std::to_string(c));
            }
            if (!grouped.insert(c).second) {
                throw ValidationError("scenario '" + sc.id + "': code " + std::to_string(c) +
                                      " appears in more than one lane group");
            }
        }
    }
    if (grouped != moving) {
        throw ValidationError("scenario '" + sc.id +
                              "': lane groups must cover all moving-agent codes");
    }

    for (const auto& ep : sc.episodes) {
        const std::string ep_where = "episode '" + ep.id + "'";
        if (ep.steps.empty()) {
            throw ValidationError(ep_where + ": contains no steps");
        }
        if (!(ep.dt > 0.0)) {
            throw ValidationError(ep_where + ": dt must be positive");
        }
        int prev_index = -1;
        for (const auto& step : ep.steps) {
            const std::string where = ep_where + " step " + std::to_string(step.index);
            if (step.index <= prev_index) {
                throw ValidationError(ep_where + ": step indices must be strictly increasing");
            }
            prev_index = step.index;

            std::unordered_set<int> seen;
            bool has_self = false;
            for (const auto& obs : step.observations) {
                auto kind_it = kind_of.find(obs.code);
                if (kind_it == kind_of.end()) {
                    throw ValidationError(where + ": unknown code " + std::to_string(obs.code));
                }
                if (!seen.insert(obs.code).second) {
                    throw ValidationError(where + ": duplicate code " + std::to_string(obs.code));
                }
                if (kind_it->second == ElementKind::SelfState) has_self = true;
                if (kind_it->second != ElementKind::MovingAgent &&
                    (obs.dy != 0.0 || obs.dx != 0.0)) {
                    throw ValidationError(where + ": " + to_string(kind_it->second) +
                                          " observation code " + std::to_string(obs.code) +
                                          " must have zero distances");
                }
            }
            if (!has_self) {
                throw ValidationError(where + ": no self-state observation");
            }
        }
    }
}

}  // namespace

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FileParseError(path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw FileParseError(path + ": top level must be an object");
    }
    static const std::set<std::string> known = {"id", "vocabulary", "lane_groups", "episodes"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw FileParseError(path + ": unknown top-level field '" + item.key() + "'");
        }
    }

    Scenario sc;
    sc.id = require_string(j, "id", path);

    for (const auto& vj : require_array(j, "vocabulary", path)) {
        const std::string where = path + ": vocabulary";
        ContextElement el;
        el.code = require_int(vj, "code", where);
        try {
            el.kind = element_kind_from_string(require_string(vj, "kind", where));
        } catch (const FileParseError& e) {
            throw FileParseError(where + ": " + e.what());
        }
        el.description = require_string(vj, "description", where);
        sc.vocabulary.push_back(std::move(el));
    }

    for (const auto& gj : require_array(j, "lane_groups", path)) {
        const std::string where = path + ": lane_groups";
        LaneGroup g;
        g.name = require_string(gj, "name", where);
        for (const auto& cj : require_array(gj, "codes", where)) {
            if (!cj.is_number_integer()) {
                throw FileParseError(where + ": codes must be integers");
            }
            g.codes.push_back(cj.get<int>());
        }
        sc.lane_groups.push_back(std::move(g));
    }

    for (const auto& ej : require_array(j, "episodes", path)) {
        Episode ep;
        ep.id = require_string(ej, "id", path + ": episodes");
        const std::string where = path + ": episode '" + ep.id + "'";
        ep.scenario_id = sc.id;
        ep.dt = require_number(ej, "dt", where);
        for (const auto& sj : require_array(ej, "steps", where)) {
            TimeStep step;
            step.index = require_int(sj, "index", where);
            step.dt = ep.dt;
            const std::string swhere = where + " step " + std::to_string(step.index);
            for (const auto& oj : require_array(sj, "observations", swhere)) {
                Observation obs;
                obs.code = require_int(oj, "code", swhere);
                obs.dy = require_number(oj, "dy", swhere);
                obs.dx = require_number(oj, "dx", swhere);
                step.observations.push_back(obs);
            }
            ep.steps.push_back(std::move(step));
        }
        sc.episodes.push_back(std::move(ep));
    }

    validate_scenario(sc);
    return sc;
}

AssociationMatrix build_association_matrix(const TimeStep& step, int vocab_size,
                                           double lambda) {
    if (!(lambda > 0.0)) {
        throw ArgumentError("lambda must be positive, got " + std::to_string(lambda));
    }
    AssociationMatrix m(vocab_size);
    // One representative per code; duplicates are excluded by the TimeStep
    // invariant, the first occurrence wins when the builder is fed raw data.
    std::vector<Observation> active;
    for (const auto& obs : step.observations) {
        bool dup = false;
        for (const auto& a : active) {
            if (a.code == obs.code) {
                dup = true;
                break;
            }
        }
        if (!dup) active.push_back(obs);
    }
    for (size_t a = 0; a < active.size(); ++a) {
        m.set(active[a].code, active[a].code, 1.0);
        for (size_t b = a + 1; b < active.size(); ++b) {
            const double d = std::abs(active[a].dy - active[b].dy) +
                             std::abs(active[a].dx - active[b].dx);
            const double k = std::exp(-d / lambda);
            m.set(active[a].code, active[b].code, k);
            m.set(active[b].code, active[a].code, k);
        }
    }
    return m;
}

std::vector<TimeStep> enumerate_combinations(const TimeStep& step,
                                             const std::vector<LaneGroup>& lane_groups) {
    std::unordered_set<int> moving;
    for (const auto& g : lane_groups) {
        moving.insert(g.codes.begin(), g.codes.end());
    }

    std::vector<Observation> base;
    for (const auto& obs : step.observations) {
        if (!moving.count(obs.code)) base.push_back(obs);
    }

    // Representatives per group, in group order, codes ascending.
    std::vector<std::vector<Observation>> reps;
    for (const auto& g : lane_groups) {
        std::vector<Observation> in_group;
        for (const auto& obs : step.observations) {
            if (std::find(g.codes.begin(), g.codes.end(), obs.code) != g.codes.end()) {
                in_group.push_back(obs);
            }
        }
        if (in_group.empty()) continue;
        std::sort(in_group.begin(), in_group.end(),
                  [](const Observation& a, const Observation& b) { return a.code < b.code; });
        reps.push_back(std::move(in_group));
    }

    if (reps.empty()) {
        return {step};
    }

    std::vector<TimeStep> out;
    std::vector<size_t> sel(reps.size(), 0);
    for (;;) {
        TimeStep reduced;
        reduced.index = step.index;
        reduced.dt = step.dt;
        reduced.observations = base;
        for (size_t gi = 0; gi < reps.size(); ++gi) {
            reduced.observations.push_back(reps[gi][sel[gi]]);
        }
        std::sort(reduced.observations.begin(), reduced.observations.end(),
                  [](const Observation& a, const Observation& b) { return a.code < b.code; });
        out.push_back(std::move(reduced));

        int pos = static_cast<int>(reps.size()) - 1;
        while (pos >= 0) {
            if (++sel[pos] < reps[pos].size()) break;
            sel[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<int> sorted_active_codes(const TimeStep& step) {
    std::vector<int> codes;
    codes.reserve(step.observations.size());
    for (const auto& obs : step.observations) codes.push_back(obs.code);
    std::sort(codes.begin(), codes.end());
    return codes;
}

}  // namespace semmem
