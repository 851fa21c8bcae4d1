#pragma once

#include <stdexcept>

namespace backedge {

class RamseyUnknown : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

/// Classical two-colour Ramsey numbers: R(1, k) = 1, R(2, k) = k, R(3, 3) = 6,
/// R(3, 4) = 9, R(3, 5) = 14, R(4, 4) = 18, symmetric. Only R(3, 3) is
/// re-derived in the tests; the others are imported constants. Any other
/// pair throws RamseyUnknown.
int ramsey(int i, int j);

bool ramsey_known(int i, int j);

} // namespace backedge
