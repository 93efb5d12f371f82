#pragma once

#include "octa/types.hpp"

namespace octa {

// arg in (-pi, pi]; on the negative real axis the branch from above
cx principal_log(cx z);
// arg in (-pi/2, pi/2]
cx principal_sqrt(cx z);
// principal Li2, on the cut [1, inf) the limit from below
cx dilog(cx z);
// D(z) = Im Li2(z) + log|z| arg(1-z); domain error at 0 and 1
double bloch_wigner(cx z);

}  // namespace octa
