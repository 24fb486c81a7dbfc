// errors.cpp -- names and summaries for the error taxonomy.

#include "markovmm/errors.hpp"

namespace markovmm {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_rational: return "MalformedRational";
        case Errc::unsorted_partition: return "UnsortedPartition";
        case Errc::condition_violation: return "ConditionViolation";
        case Errc::unsupported_branch_kind: return "UnsupportedBranchKind";
        case Errc::not_admissible: return "NotAdmissible";
        case Errc::explosion_guard: return "ExplosionGuard";
        case Errc::non_convergence: return "NonConvergence";
        case Errc::not_irreducible: return "NotIrreducible";
        case Errc::zero_entropy: return "ZeroEntropy";
        case Errc::verification_failure: return "VerificationFailure";
        case Errc::not_a_trajectory: return "NotATrajectory";
        case Errc::not_properly_parametrized: return "NotProperlyParametrized";
        case Errc::not_no_crossing: return "NotNoCrossing";
        case Errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

std::string ValidationError::summarize(const std::vector<Violation>& violations) {
    if (violations.empty()) return "no violations recorded";
    std::string out = std::to_string(violations.size()) + " violation(s);";
    for (const auto& v : violations) {
        out += " [condition " + std::to_string(v.condition);
        if (!v.symbol.empty()) out += ", symbol " + v.symbol;
        out += "] " + v.detail + ";";
    }
    if (!out.empty() && out.back() == ';') out.pop_back();
    return out;
}

}  // namespace markovmm
