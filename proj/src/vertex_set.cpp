#include "dicolor/vertex_set.hpp"

#include <boost/function_output_iterator.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace dicolor {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    s.bits_.set();
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v >= bits_.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(bits_.size()));
    bits_.set(v);
}

void VertexSet::erase(Vertex v)
{
    if (v < bits_.size())
        bits_.reset(v);
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    bits_ &= other.bits_;
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    bits_ |= other.bits_;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    bits_ -= other.bits_;
    return *this;
}

VertexSet VertexSet::complement() const
{
    return VertexSet(~bits_);
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

std::size_t VertexSet::hash() const
{
    // FNV-1a over the blocks.
    std::uint64_t h = 1469598103934665603ULL ^ bits_.size();
    boost::to_block_range(bits_, boost::make_function_output_iterator([&h](std::uint64_t b) {
                              h ^= b;
                              h *= 1099511628211ULL;
                          }));
    return static_cast<std::size_t>(h);
}

std::string to_string(const VertexSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first)
            os << ", ";
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace dicolor
