#pragma once

#include <string>

#include "reasonkit/tree.hpp"

namespace reasonkit {

// Tree file format:
//   {"n": <int>, "root": <id>, "nodes": [{"id":..,"var":..,"left":..,"right":..}
//                                        | {"id":..,"leaf":0|1}, ...]}
// Left child = variable assigned 0, right = 1. parse/serialize round-trip is
// the identity modulo whitespace; node ids and order are preserved.
DecisionTree parse_tree(const std::string& text);
std::string serialize_tree(const DecisionTree& tree);

DecisionTree load_tree(const std::string& path);
void save_tree(const DecisionTree& tree, const std::string& path);

} // namespace reasonkit
