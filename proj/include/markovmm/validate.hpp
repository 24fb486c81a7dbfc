// validate.hpp -- structural validity checks for Markov multi-maps.

#pragma once

#include "markovmm/errors.hpp"
#include "markovmm/multimap.hpp"

#include <vector>

namespace markovmm {

// strict: vertical-symbol ranges span exactly one partition cell.
// allow_multicell: vertical ranges may cross interior partition points
// (the shape accepted by reparametrize, which splits them).
enum class A1RangePolicy { strict, allow_multicell };

// Checks conditions (1)-(6) and returns every violation found.
// Throws Error(unsorted_partition) if the partition points are not strictly
// increasing, since cell-based checks are meaningless in that case.
std::vector<Violation> check_multimap(const MarkovMultiMap& m,
                                      A1RangePolicy policy = A1RangePolicy::strict);

// Throws ValidationError listing all violations unless the map is valid.
void validate_or_throw(const MarkovMultiMap& m, A1RangePolicy policy = A1RangePolicy::strict);

}  // namespace markovmm
