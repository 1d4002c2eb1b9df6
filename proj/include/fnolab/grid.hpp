#pragma once

#include <cstddef>
#include <vector>

namespace fnolab {

/// Uniform rectilinear grid over a box, 1 to 3 axes. Point i on an axis of
/// length N with extent L sits at x = i*L/N (periodic sampling convention).
struct Grid {
    std::vector<std::size_t> shape;  ///< points per axis, each >= 2
    std::vector<double> extent;      ///< physical length per axis, > 0
    std::vector<bool> periodic;      ///< per-axis periodicity

    std::size_t ndim() const { return shape.size(); }

    std::size_t points() const {
        std::size_t p = 1;
        for (std::size_t n : shape) p *= n;
        return p;
    }

    bool all_periodic() const {
        for (bool b : periodic)
            if (!b) return false;
        return true;
    }

    /// Physical coordinate of point index `i` along `axis`.
    double coord(std::size_t axis, std::size_t i) const {
        return extent[axis] * static_cast<double>(i) / static_cast<double>(shape[axis]);
    }

    bool operator==(const Grid& o) const {
        return shape == o.shape && extent == o.extent && periodic == o.periodic;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Unit-box grid, periodic on every axis unless told otherwise.
Grid make_grid(std::vector<std::size_t> shape, bool periodic = true, double extent = 1.0);

/// Throws std::domain_error on empty/oversized ndim, shape < 2, extent <= 0.
void validate_grid(const Grid& g);

} // namespace fnolab
