#pragma once

// Text formats.
//
// Digraph ("dgf"), 1-based vertices:
//     c <comment>
//     p dgf <n> <m>
//     a <u> <v>          (exactly m lines, arc u -> v)
// Every line, the last included, ends with '\n'.
//
// Colouring, 1-based vertices and 0-based colours:
//     s colors <k>
//     v <vertex> <color> (one line per vertex, ascending)

#include "dicolor/digraph.hpp"
#include "dicolor/oracles.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dicolor {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Digraph parse_digraph(std::string_view text);
Digraph parse_digraph_file(const std::filesystem::path& path);
std::string format_digraph(const Digraph& d, std::string_view comment = {});
void write_digraph_file(const Digraph& d, const std::filesystem::path& path, std::string_view comment = {});

Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);
void write_coloring_file(const Coloring& c, const std::filesystem::path& path);

} // namespace dicolor
