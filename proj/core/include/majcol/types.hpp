#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace majcol {

// Vertices are dense and 1-based: v_1, v_2, ... The integer order is the
// enumeration order used by every prefix/compactness construction.
using Vertex = std::uint32_t;

enum class ColourId : std::uint32_t {};

inline constexpr ColourId kNoColour{std::numeric_limits<std::uint32_t>::max()};

constexpr auto to_index(ColourId c) noexcept -> std::uint32_t
{
    return static_cast<std::uint32_t>(c);
}

// An ordered vertex pair. For undirected graphs edges are stored with
// first < second; for digraphs it is the arc first -> second.
struct Edge
{
    Vertex first = 0;
    Vertex second = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input; maps to CLI exit code 2.
class InputError : public Error
{
public:
    InputError(std::string path, const std::string & message) :
        Error(path.empty() ? message : path + ": " + message),
        _path(std::move(path))
    {
    }

    auto path() const -> const std::string & { return _path; }

private:
    std::string _path;
};

// A configured search-space cap was exceeded; maps to CLI exit code 3.
class CapExceeded : public Error
{
public:
    using Error::Error;
};

class CycleError : public Error
{
public:
    explicit CycleError(Vertex on_cycle) :
        Error("digraph has a directed cycle through vertex " + std::to_string(on_cycle)),
        _vertex(on_cycle)
    {
    }

    auto vertex() const -> Vertex { return _vertex; }

private:
    Vertex _vertex;
};

} // namespace majcol

template <>
struct std::hash<majcol::ColourId>
{
    auto operator()(majcol::ColourId c) const noexcept -> std::size_t
    {
        return std::hash<std::uint32_t>{}(majcol::to_index(c));
    }
};
