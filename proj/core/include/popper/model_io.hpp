#pragma once

#include <iosfwd>
#include <string>

#include "popper/state.hpp"

namespace popper {

// Reads the line-oriented model format:
//
//   atoms: O S J
//   world w0: O=1 S=0 J=1
//   rank 0: w0=1
//
// Blank lines and lines starting with '#' are ignored. Weights are exact
// rationals ("p/q" or "p"). Rank indices must run 0, 1, 2, ... with no gaps;
// a file declaring worlds but no ranks is the abnormal state. Worlds listed
// in no rank are non-entertainable. Throws ModelError with the line number
// for malformed input, and surfaces the state validator's errors unchanged.
EpistemicState parse_model(std::istream& in);
EpistemicState parse_model_text(const std::string& text);

// parse_model over the file's contents; the error message names the path.
EpistemicState load_model(const std::string& path);

// Inverse of parse_model: parse_model_text(serialize_model(s)) == s. Lists
// non-entertainable worlds in a trailing comment; an abnormal state gets a
// comment in place of rank lines.
std::string serialize_model(const EpistemicState& state);
void save_model(const EpistemicState& state, const std::string& path);

}  // namespace popper
