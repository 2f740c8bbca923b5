#pragma once

#include <string>
#include <vector>

#include "gdcage/graph.hpp"

namespace gdcage {

// Standard graph6: header byte(s), then the upper triangle in column-major
// order x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per character with
// a +63 offset and zero padding.
std::string graph6_encode(const Graph& g);

Graph graph6_decode(const std::string& text);

// One graph per line, newline-terminated.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& gs);

}  // namespace gdcage
