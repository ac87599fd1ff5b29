#pragma once

#include <array>
#include <cstdint>

namespace hhc::layout {

// Qubit numbering of the 23-qubit layout figure, kept 1-based in this table
// and converted with idx() everywhere else. Code qubits 1-9 form the grid
//     1 2 3
//     4 5 6
//     7 8 9
// Ancillas 10-23:
//   10, 15        X-syndromes for the (1,4) and (6,9) gauge pairs
//   11, 12, 13, 14  X-syndromes for (2,5), (3,6), (4,7), (5,8); during the
//                   Z sub-round they serve as flags and feed the deflag rules
//   17, 22        Z-syndromes for the weight-2 gauges Z1Z2 and Z8Z9
//   19, 20        Z-syndromes of the weight-4 gauges Z2Z3Z5Z6 and Z4Z5Z7Z8
//   16, 21        parity carriers between 11<->19 and 14<->20 (flags, ignored)
//   18, 23        pendant flags on 19 and 20 (ignored)
// The device edges are: 1-(10,17), 2-(17,11), 3-(12,19), 4-(10,13), 5-(11,14),
// 6-(12,15), 7-(13,20), 8-(14,22), 9-(15,22), 11-16, 16-19, 19-18, 14-21,
// 21-20, 20-23.

constexpr uint32_t kQubits = 23;

constexpr uint32_t kXA14 = 10, kXA25 = 11, kXA36 = 12, kXA47 = 13, kXA58 = 14, kXA69 = 15;
constexpr uint32_t kCarT = 16, kA12 = 17, kPendT = 18, kHubT = 19;
constexpr uint32_t kHubB = 20, kCarB = 21, kA89 = 22, kPendB = 23;

constexpr std::array<uint32_t, 4> kZSyndromes = {kA12, kHubT, kHubB, kA89};
constexpr std::array<uint32_t, 2> kPureXSyndromes = {kXA14, kXA69};
constexpr std::array<uint32_t, 8> kFlags = {kXA25, kXA36, kXA47, kXA58,
                                            kCarT, kPendT, kCarB, kPendB};
// Flags whose outcomes carry deflag corrections; the other four are ignored.
constexpr std::array<uint32_t, 4> kDeflagFlags = {kXA25, kXA36, kXA47, kXA58};

// X-gauge pairs in the order of the gauge group generators.
constexpr std::array<std::array<uint32_t, 3>, 6> kXGauges = {{
    {kXA14, 1, 4},
    {kXA25, 2, 5},
    {kXA36, 3, 6},
    {kXA47, 4, 7},
    {kXA58, 5, 8},
    {kXA69, 6, 9},
}};

constexpr uint32_t idx(uint32_t paper_number) { return paper_number - 1; }

}  // namespace hhc::layout
