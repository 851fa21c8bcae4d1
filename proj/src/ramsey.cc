#include <backedge/ramsey.hh>

#include <string>
#include <utility>

namespace backedge {

namespace {

int lookup(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i < 1)
        return 0;
    if (i == 1)
        return 1;
    if (i == 2)
        return j;
    if (i == 3 && j == 3)
        return 6;
    if (i == 3 && j == 4)
        return 9;
    if (i == 3 && j == 5)
        return 14;
    if (i == 4 && j == 4)
        return 18;
    return 0;
}

} // namespace

bool ramsey_known(int i, int j) { return lookup(i, j) > 0; }

int ramsey(int i, int j)
{
    int r = lookup(i, j);
    if (r == 0)
        throw RamseyUnknown("R(" + std::to_string(i) + "," + std::to_string(j) + ") unknown");
    return r;
}

} // namespace backedge
