#ifndef BISIMLAB_LTSP_HPP
#define BISIMLAB_LTSP_HPP

#include <string>

#include "bisimlab/lts.hpp"

namespace bisimlab {

/// Canonical text form of a system. Line-oriented, ASCII, LF endings:
///   LTSP 1
///   states <n>
///   actions <name> <name> ...
///   transitions <m>
///   <src> <action-name> <dst>        (m lines, sorted)
///   partition <b>
///   <block id> ... <block id>        (n ids, 0-based, in state order)
std::string write_ltsp(const Lts& lts);

/// Inverse of write_ltsp. Accepts extra blank lines at the end and repeated
/// spaces between tokens; anything else malformed throws InputError.
/// Display names are not part of the format.
Lts parse_ltsp(const std::string& text);

Lts load_ltsp_file(const std::string& path);
void save_ltsp_file(const Lts& lts, const std::string& path);

} // namespace bisimlab

#endif
