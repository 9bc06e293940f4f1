#pragma once

#include <ostream>

// Invariant batteries: special-function identities, CDF closed forms against
// direct quadrature, the quadrature battery of analytically known integrals,
// hull invariants on random clouds, and sampler distribution checks.
// Shared by the CLI `selftest` command and the acceptance suite.

namespace betapoly::selftest {

bool run_all(std::ostream& os);

}  // namespace betapoly::selftest
