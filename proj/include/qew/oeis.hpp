#pragma once

#include "qew/rational.hpp"

#include <string>
#include <vector>

namespace qew {

struct OeisEntry {
    std::string id;    // e.g. "A001006"
    std::string name;
};

/// Search OEIS for sequences starting with the given terms (at least 6).
/// Networking is opt-in: online must be true and QEW_OFFLINE must not be set.
/// QEW_OEIS_BASE_URL overrides the endpoint (default https://oeis.org).
/// Purely advisory; never used by correctness-gating tests.
std::vector<OeisEntry> oeis_lookup(const std::vector<BigInt>& prefix, bool online);

}  // namespace qew
