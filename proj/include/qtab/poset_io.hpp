#pragma once

#include <string>

#include "qtab/poset.hpp"

namespace qtab {

/// "rect:2x3", "shape:3,1", "shifted:3,2,1", "chain:4",
/// "minuscule:E6|E7|propeller:k|staircase:k|rect:axb", or a path to a poset
/// JSON file. Throws ParseError, InvalidPartition, UnknownFamily, InvalidPoset.
Poset parse_poset_spec(const std::string& spec);

/// {"n", "covers": [[i,j],...], "labeling": [...], "origin": {...}}, 0-based.
std::string poset_to_json(const Poset& p);
/// Elements are reindexed by their labeling; the labeling must be natural.
Poset poset_from_json(const std::string& text);

}  // namespace qtab
