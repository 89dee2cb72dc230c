#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace dicolor {

using Vertex = std::size_t;

// A subset of {0, ..., universe-1}. Thin value wrapper over a dynamic bitset
// so that neighbourhood algebra stays word-parallel.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const Bits* bits, Vertex pos) : bits_(bits), pos_(pos) {}

        Vertex operator*() const { return pos_; }
        const_iterator& operator++()
        {
            pos_ = bits_->find_next(pos_);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const Bits* bits_ = nullptr;
        Vertex pos_ = Bits::npos;
    };

    static constexpr Vertex npos = Bits::npos;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe) {}
    explicit VertexSet(Bits bits) : bits_(std::move(bits)) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

    void insert(Vertex v);
    void erase(Vertex v);
    void clear() { bits_.reset(); }

    Vertex first() const { return bits_.find_first(); }
    Vertex next(Vertex v) const { return bits_.find_next(v); }

    const_iterator begin() const { return {&bits_, bits_.find_first()}; }
    const_iterator end() const { return {&bits_, npos}; }

    bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    std::vector<Vertex> to_vector() const;
    const Bits& bits() const { return bits_; }
    std::size_t hash() const;

private:
    Bits bits_;
};

// Formats as "{0, 3, 5}".
std::string to_string(const VertexSet& s);

} // namespace dicolor

template <>
struct std::hash<dicolor::VertexSet> {
    std::size_t operator()(const dicolor::VertexSet& s) const noexcept { return s.hash(); }
};
