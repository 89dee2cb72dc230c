#include "dicolor/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace dicolor {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ')
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t number(std::string_view token, std::size_t line, const char* what)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

// Splits into lines, rejecting a missing final newline.
std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            throw ParseError(lines.size() + 1, "missing trailing newline");
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace

Digraph parse_digraph(std::string_view text)
{
    const auto lines = lines_of(text);
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Arc> arcs;
    std::set<Arc> seen;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view line = lines[i];
        if (line.starts_with("c ") || line == "c")
            continue;
        const auto tok = tokens(line);
        if (tok.empty())
            throw ParseError(lineno, "empty line");
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "dgf")
                throw ParseError(lineno, "header must read 'p dgf <n> <m>'");
            n = number(tok[2], lineno, "vertex count");
            m = number(tok[3], lineno, "arc count");
            have_header = true;
            continue;
        }
        if (tok[0] == "a") {
            if (!have_header)
                throw ParseError(lineno, "arc before header");
            if (tok.size() != 3)
                throw ParseError(lineno, "arc line must read 'a <u> <v>'");
            const std::size_t u = number(tok[1], lineno, "vertex");
            const std::size_t v = number(tok[2], lineno, "vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex out of range in arc " + std::string(tok[1]) + " " + std::string(tok[2]));
            if (u == v)
                throw ParseError(lineno, "loop at vertex " + std::to_string(u));
            if (seen.count({u, v}))
                throw ParseError(lineno, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
            if (seen.count({v, u}))
                throw ParseError(lineno, "anti-parallel arc " + std::to_string(u) + " " + std::to_string(v));
            if (arcs.size() == m)
                throw ParseError(lineno, "more than " + std::to_string(m) + " arcs");
            seen.insert({u, v});
            arcs.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError(lineno, "unexpected content '" + std::string(line) + "'");
    }
    if (!have_header)
        throw ParseError(lines.size() + 1, "missing 'p dgf' header");
    if (arcs.size() != m)
        throw ParseError(lines.size(), "header announces " + std::to_string(m) + " arcs, found " +
                                           std::to_string(arcs.size()));
    return Digraph(n, arcs);
}

Digraph parse_digraph_file(const std::filesystem::path& path)
{
    return parse_digraph(read_file(path));
}

std::string format_digraph(const Digraph& d, std::string_view comment)
{
    std::ostringstream os;
    if (!comment.empty())
        os << "c " << comment << '\n';
    os << "p dgf " << d.size() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs())
        os << "a " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

void write_digraph_file(const Digraph& d, const std::filesystem::path& path, std::string_view comment)
{
    write_file(path, format_digraph(d, comment));
}

Coloring parse_coloring(std::string_view text)
{
    const auto lines = lines_of(text);
    if (lines.empty())
        throw ParseError(1, "missing 's colors' line");
    const auto head = tokens(lines[0]);
    if (head.size() != 3 || head[0] != "s" || head[1] != "colors")
        throw ParseError(1, "first line must read 's colors <k>'");
    Coloring c;
    c.num_colors = static_cast<int>(number(head[2], 1, "colour count"));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tok = tokens(lines[i]);
        if (tok.size() != 3 || tok[0] != "v")
            throw ParseError(i + 1, "vertex line must read 'v <vertex> <color>'");
        const std::size_t v = number(tok[1], i + 1, "vertex");
        if (v != i)
            throw ParseError(i + 1, "vertices must be listed in order from 1");
        const std::size_t color = number(tok[2], i + 1, "colour");
        if (color >= static_cast<std::size_t>(c.num_colors))
            throw ParseError(i + 1, "colour " + std::to_string(color) + " out of range");
        c.colors.push_back(static_cast<int>(color));
    }
    return c;
}

std::string format_coloring(const Coloring& c)
{
    std::ostringstream os;
    os << "s colors " << c.num_colors << '\n';
    for (Vertex v = 0; v < c.size(); ++v)
        os << "v " << v + 1 << ' ' << c[v] << '\n';
    return os.str();
}

void write_coloring_file(const Coloring& c, const std::filesystem::path& path)
{
    write_file(path, format_coloring(c));
}

} // namespace dicolor
