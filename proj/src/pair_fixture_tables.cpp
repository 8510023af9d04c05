#include "smearlab/pair_fixture_tables.hpp"

namespace smearlab::fixtures {

// S_z, times (hbar+beta)/(1+delta).
const std::vector<PrintedEntry> kPairSz = {
    {0, 0, {{{1, 0}, {2, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {1, 1, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {1, 2, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {2, 1, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 2, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {4, 4, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {4, 8, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {5, 5, {{{1, 0}, {0, 0}, {-1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {5, 6, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {5, 9, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {6, 5, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {6, 10, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {7, 7, {{{0, 0}, {-1, 0}, {-1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {7, 11, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 4, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {8, 8, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {9, 5, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {9, 10, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {10, 6, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {10, 9, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {10, 10, {{{-1, 0}, {0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {11, 7, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {11, 11, {{{-1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {13, 13, {{{0, 0}, {-1, 0}, {-1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {13, 14, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {14, 13, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {14, 14, {{{-1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {15, 15, {{{-1, 0}, {-2, 0}, {-1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
};

// S^2, times (hbar+beta)^2/(1+delta).
const std::vector<PrintedEntry> kPairS2 = {
    {0, 0, {{{2, 0}, {4, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {1, 1, {{{2, 0}, {3, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {1, 2, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {1, 4, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {1, 8, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 1, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 2, {{{1, 0}, {3, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {2, 4, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {2, 8, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {3, 3, {{{1, 0}, {2, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {3, 5, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {3, 6, {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, -2}, {0, 0}}}},
    {3, 9, {{{1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, -2}, {0, 0}, {0, 0}}}},
    {3, 10, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {4, 1, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {4, 2, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {4, 4, {{{2, 0}, {3, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {4, 8, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {5, 3, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {5, 5, {{{2, 0}, {2, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {5, 6, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {5, 9, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {5, 10, {{{0, 0}, {-2, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {5, 12, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {6, 3, {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, -2}, {0, 0}}}},
    {6, 5, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {6, 6, {{{1, 0}, {4, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {6, 9, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {6, 10, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {6, 12, {{{1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, -2}, {0, 0}, {0, 0}}}},
    {7, 7, {{{1, 0}, {3, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {7, 11, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {7, 13, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {7, 14, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 1, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 2, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {8, 4, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {8, 8, {{{1, 0}, {3, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {9, 3, {{{1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, -2}, {0, 0}, {0, 0}}}},
    {9, 5, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {9, 6, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {9, 9, {{{1, 0}, {4, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {9, 10, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {9, 12, {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, -2}, {0, 0}}}},
    {10, 3, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {10, 5, {{{0, 0}, {-2, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {10, 6, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {10, 9, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {10, 10, {{{2, 0}, {2, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {10, 12, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, 1}, {0, 0}}}},
    {11, 7, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {11, 11, {{{2, 0}, {3, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {11, 13, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {11, 14, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {12, 5, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {12, 6, {{{1, 0}, {-1, 0}, {0, 0}, {0, 0}}}, {{{0, -2}, {0, 0}, {0, 0}}}},
    {12, 9, {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 2}, {0, 0}}}},
    {12, 10, {{{0, 0}, {2, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, -1}, {0, 0}}}},
    {12, 12, {{{1, 0}, {2, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {13, 11, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {13, 13, {{{1, 0}, {3, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {13, 14, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {14, 7, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {14, 11, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {14, 13, {{{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {14, 14, {{{2, 0}, {3, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
    {15, 15, {{{2, 0}, {4, 0}, {2, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}},
};

// S_+, times (hbar+beta)/(1+delta).
const std::vector<PrintedEntry> kPairSplus = {
    {0, 1, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {0, 2, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {0, 4, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {0, 8, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {1, 3, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {1, 5, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {1, 9, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 3, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 6, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {2, 10, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {3, 7, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {3, 11, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {4, 5, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {4, 6, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {4, 12, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {5, 7, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {5, 13, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {6, 7, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {6, 14, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {7, 15, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 9, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 10, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {8, 12, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {9, 11, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {9, 13, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {10, 11, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {10, 14, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {11, 15, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {12, 13, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {12, 14, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {13, 15, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {14, 15, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
};

// S_-, times (hbar+beta)/(1+delta).
const std::vector<PrintedEntry> kPairSminus = {
    {1, 0, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {2, 0, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {3, 1, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {3, 2, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {4, 0, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {5, 1, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {5, 4, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {6, 2, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {6, 4, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {7, 3, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {7, 5, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {7, 6, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {8, 0, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {9, 1, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {9, 8, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {10, 2, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {10, 8, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {11, 3, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {11, 9, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {11, 10, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {12, 4, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {12, 8, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {13, 5, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {13, 9, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {13, 12, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {14, 6, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {14, 10, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {14, 12, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {15, 7, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {15, 11, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
    {15, 13, {{{1, 0}, {1, 0}, {0, 0}, {0, 0}}}, {{{0, -1}, {0, -1}, {0, 0}}}},
    {15, 14, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}, {{{0, 1}, {0, 1}, {0, 0}}}},
};

}  // namespace smearlab::fixtures
