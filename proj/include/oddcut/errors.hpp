#pragma once

#include <stdexcept>
#include <string>

namespace oddcut {

enum class errc {
    invalid_argument,
    malformed_graph6,
    not_cubic,
    not_simple,
    disconnected,
    unknown_name,
    generation_exhausted,
    budget_exceeded,
    k_too_large,
    not_independent,
    not_member,
    cap_exceeded,
    no_free_vertex,
    iteration_cap_exceeded,
    threshold_not_met,
    k_out_of_range,
    balance_failed,
    not_alternating,
    result_not_independent,
    bad_start,
    not_bipartite,
    balance_infeasible,
    step_failed,
    not_tripartite,
};

constexpr const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::malformed_graph6: return "MalformedGraph6";
    case errc::not_cubic: return "NotCubic";
    case errc::not_simple: return "NotSimple";
    case errc::disconnected: return "Disconnected";
    case errc::unknown_name: return "UnknownName";
    case errc::generation_exhausted: return "GenerationExhausted";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::k_too_large: return "KTooLarge";
    case errc::not_independent: return "NotIndependent";
    case errc::not_member: return "NotMember";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::no_free_vertex: return "NoFreeVertex";
    case errc::iteration_cap_exceeded: return "IterationCapExceeded";
    case errc::threshold_not_met: return "ThresholdNotMet";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::balance_failed: return "BalanceFailed";
    case errc::not_alternating: return "NotAlternating";
    case errc::result_not_independent: return "ResultNotIndependent";
    case errc::bad_start: return "BadStart";
    case errc::not_bipartite: return "NotBipartite";
    case errc::balance_infeasible: return "BalanceInfeasible";
    case errc::step_failed: return "StepFailed";
    case errc::not_tripartite: return "NotTripartite";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) {
    throw error(c, what);
}

}  // namespace oddcut
