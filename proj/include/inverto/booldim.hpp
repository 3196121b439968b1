#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "inverto/core.hpp"

namespace inverto {

/// Largest ambient dimension handled by the solver.
inline constexpr int kMaxBoolDimension = 32;

/// Element of GF(2)^width; coordinate i is bit i.
class GF2Vector {
public:
    GF2Vector() = default;
    GF2Vector(int width, std::uint32_t bits);

    int width() const noexcept { return width_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool coordinate(int i) const noexcept { return (bits_ >> i) & 1u; }

    /// Standard scalar product sum_i u_i v_i mod 2.
    friend bool dot(const GF2Vector& u, const GF2Vector& v);

    bool operator==(const GF2Vector&) const = default;

private:
    int width_ = 0;
    std::uint32_t bits_ = 0;
};

/// Vertex -> GF(2)^dimension map.
struct Representation {
    int dimension = 0;
    std::vector<GF2Vector> vectors;

    /// True iff dot(f(x), f(y)) == g(x, y) for every pair x != y.
    bool represents(const SimpleGraph& g) const;
};

/// A width-m representation of g, or nullopt if none exists.
std::optional<Representation> find_representation(const SimpleGraph& g, int m);

struct BooleanDimension {
    int dimension = 0;
    Representation witness;
};

/// Least m admitting a representation, by ascending search from 0.
BooleanDimension boolean_dimension(const SimpleGraph& g);

/// Ascending search that gives up once `limit` is reached; nullopt means
/// the dimension is at least `limit`.
std::optional<BooleanDimension> boolean_dimension_below(const SimpleGraph& g, int limit);

/// X_i = {x : f(x)_i = 1}.
InversionSequence parity_set_system(const Representation& r);

/// Graph on `order` vertices whose edges are the pairs contained in an
/// odd number of the sets.
SimpleGraph parity_graph(const InversionSequence& sets);

}  // namespace inverto
