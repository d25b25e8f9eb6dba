// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
//
// Direction-number initialisation for the Sobol' sequence, dimensions 2..64,
// from the primitive-polynomial / initial-value tables of Joe and Kuo
// ("Constructing Sobol sequences with better two-dimensional projections",
// SIAM J. Sci. Comput. 30, 2008; the new-joe-kuo-6 table). The first
// coordinate uses the van der Corput sequence in base 2 and needs no table.

#include <cstddef>
#include <cstdint>

namespace gsa::detail {
namespace {

constexpr int kTableDims = 63;
constexpr unsigned kDegree[kTableDims] = {
    1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7,
    7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8,
    8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 9, 9,
    9, 9, 9
};
// Interior coefficients a of each primitive polynomial, packed as bits
// a_1 a_2 ... a_{s-1} (leading and trailing coefficients are implicit 1s).
constexpr unsigned kPolyCoeff[kTableDims] = {
    0, 1, 1, 2, 1, 4, 2, 4, 7, 11, 13, 14, 1, 13, 16, 19, 22, 25, 1, 4,
    7, 8, 14, 19, 21, 28, 31, 32, 37, 41, 42, 50, 55, 56, 59, 62, 14, 21, 22, 38,
    47, 49, 50, 52, 56, 67, 70, 84, 97, 103, 115, 122, 8, 13, 16, 22, 25, 44, 47, 52,
    55, 59, 62
};
constexpr unsigned kMInitOffset[kTableDims] = {
    0, 1, 3, 6, 9, 13, 17, 22, 27, 32, 37, 42, 47, 53, 59, 65, 71, 77, 83, 90,
    97, 104, 111, 118, 125, 132, 139, 146, 153, 160, 167, 174, 181, 188, 195, 202, 209, 217, 225, 233,
    241, 249, 257, 265, 273, 281, 289, 297, 305, 313, 321, 329, 337, 346, 355, 364, 373, 382, 391, 400,
    409, 418, 427
};
// Initial odd values m_1..m_s per dimension, concatenated.
constexpr unsigned kMInit[] = {
    1, 1, 3, 1, 3, 1, 1, 1, 1, 1, 1, 3, 3, 1, 3, 5, 13, 1, 1, 5,
    5, 17, 1, 1, 5, 5, 5, 1, 1, 7, 11, 19, 1, 1, 5, 1, 1, 1, 1, 1,
    3, 11, 1, 3, 5, 5, 31, 1, 3, 3, 9, 7, 49, 1, 1, 1, 15, 21, 21, 1,
    3, 1, 13, 27, 49, 1, 1, 1, 15, 7, 5, 1, 3, 1, 15, 13, 25, 1, 1, 5,
    5, 19, 61, 1, 3, 7, 11, 23, 15, 103, 1, 3, 7, 13, 13, 15, 69, 1, 1, 3,
    13, 7, 35, 63, 1, 3, 5, 9, 1, 25, 53, 1, 3, 1, 13, 9, 35, 107, 1, 3,
    1, 5, 27, 61, 31, 1, 1, 5, 11, 19, 41, 61, 1, 3, 5, 3, 3, 13, 69, 1,
    1, 7, 13, 1, 19, 1, 1, 3, 7, 5, 13, 19, 59, 1, 1, 3, 9, 25, 29, 41,
    1, 3, 5, 13, 23, 1, 55, 1, 3, 7, 3, 13, 59, 17, 1, 3, 1, 3, 5, 53,
    69, 1, 1, 5, 5, 23, 33, 13, 1, 1, 7, 7, 1, 61, 123, 1, 1, 7, 9, 13,
    61, 49, 1, 3, 3, 5, 3, 55, 33, 1, 3, 1, 15, 31, 13, 49, 245, 1, 3, 5,
    15, 31, 59, 63, 97, 1, 3, 1, 11, 11, 11, 77, 249, 1, 3, 1, 11, 27, 43, 71,
    9, 1, 1, 7, 15, 21, 11, 81, 45, 1, 3, 7, 3, 25, 31, 65, 79, 1, 3, 1,
    1, 19, 11, 3, 205, 1, 1, 5, 9, 19, 21, 29, 157, 1, 3, 7, 11, 1, 33, 89,
    185, 1, 3, 3, 3, 15, 9, 79, 71, 1, 3, 7, 11, 15, 39, 119, 27, 1, 1, 3,
    1, 11, 31, 97, 225, 1, 1, 1, 3, 23, 43, 57, 177, 1, 3, 7, 7, 17, 17, 37,
    71, 1, 3, 1, 5, 27, 63, 123, 213, 1, 1, 3, 5, 11, 43, 53, 133, 1, 3, 5,
    5, 29, 17, 47, 173, 479, 1, 3, 3, 11, 3, 1, 109, 9, 69, 1, 1, 1, 5, 17,
    39, 23, 5, 343, 1, 3, 1, 5, 25, 15, 31, 103, 499, 1, 1, 1, 11, 11, 17, 63,
    105, 183, 1, 1, 5, 11, 9, 29, 97, 231, 363, 1, 1, 5, 15, 19, 45, 41, 7, 383,
    1, 3, 7, 7, 31, 19, 83, 137, 221, 1, 1, 1, 3, 23, 15, 111, 223, 83, 1, 1,
    5, 13, 31, 15, 55, 25, 161, 1, 1, 3, 13, 25, 47, 39, 87, 257
};

}  // namespace

// Fills v[0..32) with the 32 direction values of coordinate `coord`
// (0-based), each scaled so that bit 31 is the leading fractional bit.
void sobol_fill_directions(std::size_t coord, std::uint32_t* v) {
    if (coord == 0) {
        // First coordinate: van der Corput, m_c = 1 for every c.
        for (int c = 0; c < 32; ++c) v[c] = 1u << (31 - c);
        return;
    }
    const std::size_t t = coord - 1;  // table row
    const unsigned s = kDegree[t];
    const unsigned a = kPolyCoeff[t];
    const unsigned* m = kMInit + kMInitOffset[t];
    for (unsigned c = 0; c < 32; ++c) {
        if (c < s) {
            v[c] = static_cast<std::uint32_t>(m[c]) << (31 - c);
        } else {
            std::uint32_t val = v[c - s] ^ (v[c - s] >> s);
            for (unsigned k = 1; k < s; ++k) {
                if ((a >> (s - 1 - k)) & 1u) val ^= v[c - k];
            }
            v[c] = val;
        }
    }
}

}  // namespace gsa::detail
