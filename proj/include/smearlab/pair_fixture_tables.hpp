#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace smearlab::fixtures {

// One nonzero entry of a closed-form 16x16 two-particle matrix:
//   (Σ_k a_k δ^k + √δ Σ_k b_k δ^k) / (1+δ)
// with Gaussian-integer coefficients stored as {re, im}. The overall
// prefactor is listed with each table.
struct PrintedEntry {
    std::uint8_t row;
    std::uint8_t col;
    std::array<std::array<int, 2>, 4> a;
    std::array<std::array<int, 2>, 3> b;
};

extern const std::vector<PrintedEntry> kPairSz;
extern const std::vector<PrintedEntry> kPairS2;
extern const std::vector<PrintedEntry> kPairSplus;
extern const std::vector<PrintedEntry> kPairSminus;

}  // namespace smearlab::fixtures
