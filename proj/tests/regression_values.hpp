#pragma once

// Frozen census sizes used as regression anchors.  The values were produced
// by the first full run of the enumeration and are cross-checked elsewhere:
// the n = 4 count agrees with brute-force framed-isomorphism dedup over all
// framings of all n = 4 graphs, and the n = 5 simple sub-count agrees with
// the orbit-stabilizer bookkeeping over K5's framings.  A change in either
// value means the enumeration, the framing search, or the canonical code
// changed behavior and must be investigated, not re-recorded blindly.

inline constexpr long kExpectedCensus4 = 5;
inline constexpr long kExpectedCensus5 = 18;
