#include "fairhouse/core.hpp"

#include <algorithm>
#include <string>

namespace fairhouse {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonRectangularMatrix: return "NonRectangularMatrix";
        case ErrorCode::FewerHousesThanAgents: return "FewerHousesThanAgents";
        case ErrorCode::NegativeUtility: return "NegativeUtility";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotAnInjection: return "NotAnInjection";
        case ErrorCode::PartialNotWithinSet: return "PartialNotWithinSet";
        case ErrorCode::InvalidBiclique: return "InvalidBiclique";
        case ErrorCode::InfeasibleSelection: return "InfeasibleSelection";
        case ErrorCode::NotAReducedInstance: return "NotAReducedInstance";
        case ErrorCode::InvalidOverride: return "InvalidOverride";
        case ErrorCode::NotAnExactCover: return "NotAnExactCover";
        case ErrorCode::MalformedQ: return "MalformedQ";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InstanceTooLargeForExactSolve: return "InstanceTooLargeForExactSolve";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Instance validate_instance(int n, int m, std::vector<std::vector<Utility>> utilities) {
    require(n >= 1, ErrorCode::InvalidArgument, "agent count must be at least 1");
    require(m >= n, ErrorCode::FewerHousesThanAgents,
            "need at least as many houses as agents (m >= n), got n=" + std::to_string(n) +
                " m=" + std::to_string(m));
    require(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m) <= kMaxInstanceCells,
            ErrorCode::TooLarge, "utility matrix exceeds the cell limit");
    require(utilities.size() == static_cast<std::size_t>(n), ErrorCode::NonRectangularMatrix,
            "utility matrix must have exactly n rows");
    for (const auto& row : utilities) {
        require(row.size() == static_cast<std::size_t>(m), ErrorCode::NonRectangularMatrix,
                "every utility row must have exactly m entries");
        for (Utility value : row) {
            require(value >= 0, ErrorCode::NegativeUtility, "utilities must be non-negative");
            require(value <= kMaxUtility, ErrorCode::Overflow,
                    "utility exceeds the supported range");
        }
    }
    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.utilities = std::move(utilities);
    return inst;
}

void validate_assignment(const Instance& inst, const Assignment& phi) {
    require(phi.house_of.size() == static_cast<std::size_t>(inst.n), ErrorCode::NotAnInjection,
            "assignment must map every agent to exactly one house");
    std::vector<char> used(inst.m, 0);
    for (int house : phi.house_of) {
        require(house >= 0 && house < inst.m, ErrorCode::IndexOutOfRange,
                "assigned house index out of range");
        require(!used[house], ErrorCode::NotAnInjection, "not an injection: house assigned twice");
        used[house] = 1;
    }
}

bool agent_is_envy_free(const Instance& inst, const Assignment& phi, int agent) {
    require(agent >= 0 && agent < inst.n, ErrorCode::IndexOutOfRange, "agent index out of range");
    const auto& row = inst.utilities[agent];
    Utility own = row[phi.house_of[agent]];
    for (int house : phi.house_of) {
        if (row[house] > own) return false;
    }
    return true;
}

int count_envy_free(const Instance& inst, const Assignment& phi) {
    int count = 0;
    for (int i = 0; i < inst.n; ++i) {
        if (agent_is_envy_free(inst, phi, i)) ++count;
    }
    return count;
}

bool agent_is_proportional(const Instance& inst, const Assignment& phi, int agent) {
    require(agent >= 0 && agent < inst.n, ErrorCode::IndexOutOfRange, "agent index out of range");
    const auto& row = inst.utilities[agent];
    WideInt total = 0;
    for (int house : phi.house_of) total += row[house];
    return static_cast<WideInt>(inst.n) * row[phi.house_of[agent]] >= total;
}

bool is_equitable(const Instance& inst, const Assignment& phi) {
    Utility first = inst.utilities[0][phi.house_of[0]];
    for (int i = 1; i < inst.n; ++i) {
        if (inst.utilities[i][phi.house_of[i]] != first) return false;
    }
    return true;
}

Utility inequity(const Instance& inst, const Assignment& phi) {
    Utility lo = inst.utilities[0][phi.house_of[0]];
    Utility hi = lo;
    for (int i = 1; i < inst.n; ++i) {
        Utility value = inst.utilities[i][phi.house_of[i]];
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return hi - lo;
}

FairnessReport fairness_report(const Instance& inst, const Assignment& phi) {
    validate_assignment(inst, phi);
    FairnessReport report;
    report.ef_flags.resize(inst.n);
    report.prop_flags.resize(inst.n);
    report.received.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        report.ef_flags[i] = agent_is_envy_free(inst, phi, i);
        report.prop_flags[i] = agent_is_proportional(inst, phi, i);
        report.received[i] = inst.utilities[i][phi.house_of[i]];
        if (report.ef_flags[i]) ++report.ef_count;
    }
    report.inequity = inequity(inst, phi);
    report.equitable = (report.inequity == 0);
    return report;
}

bool is_binary(const Instance& inst) {
    for (const auto& row : inst.utilities) {
        for (Utility value : row) {
            if (value != 0 && value != 1) return false;
        }
    }
    return true;
}

}  // namespace fairhouse
