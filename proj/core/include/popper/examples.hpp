#pragma once

#include "popper/state.hpp"

namespace popper {

// Bundled fixture behind `examples kennedy`: atoms O, S, J over four worlds,
// three of them ranked as singletons:
//
//   rank 0  w0: O, ~S, J    the default hypothesis
//   rank 1  w1: ~O, S, J    first fallback
//   rank 2  w2: O, S, J     last fallback
//   -       w3: ~O, ~S, ~J  consistent but not entertainable
//
// Core chain {w0} c {w0,w1} c {w0,w1,w2}: the state expects O & ~S, fully
// believes J, accepts ~O => S even though pr(~O) = 0, and supposing
// ~O & ~S lands in incoherence.
EpistemicState kennedy_model();

// A run of fair coin flips that the agent is sure will end, truncated to
// finite scale: worlds n0..nN ("first head at flip i") plus omega ("heads
// never comes"), over the single atom inf, true only at omega. Rank 0
// weights are 1/2^(i+1) renormalized to sum 1 (denominator 2^(N+1) - 1);
// rank 1 is {omega: 1}. Two cores at every N: U - {omega} and U, so
// pr({omega}) = 0 yet omega stays entertainable.
EpistemicState coin_model(unsigned longest_run = 16);

}  // namespace popper
