#ifndef PERMFOREST_VERIFY_HPP
#define PERMFOREST_VERIFY_HPP

#include <ostream>

namespace permforest {

// Exhaustive cross-validation over all permutations of sizes 1..max_n:
// the four-way forest characterization, reconstruction and bijection round
// trips, Bruhat cover counts, the total-edge and bar-frequency identities,
// and agreement of census counts with both generating-function routes.
// Writes one line per check; returns false if anything fails.
bool run_verification(int max_n, int workers, std::ostream& out);

}  // namespace permforest

#endif
