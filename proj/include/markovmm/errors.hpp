// errors.hpp -- error taxonomy shared by the whole library.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace markovmm {

enum class Errc {
    malformed_rational,
    unsorted_partition,
    condition_violation,
    unsupported_branch_kind,
    not_admissible,
    explosion_guard,
    non_convergence,
    not_irreducible,
    zero_entropy,
    verification_failure,
    not_a_trajectory,
    not_properly_parametrized,
    not_no_crossing,
    bad_input,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// One failed validity condition, in the numbering of the model definition (1..6).
struct Violation {
    int condition = 0;
    std::string symbol;  // empty for map-wide violations
    std::string detail;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(Errc::condition_violation, summarize(violations)),
          violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& violations);
    std::vector<Violation> violations_;
};

}  // namespace markovmm
