#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fnolab/grid.hpp"

namespace fnolab {

/// Real scalar samples on a Grid, row-major in axis order with a trailing
/// channel index: values[point * channels + c].
struct Field {
    Grid grid;
    std::size_t channels = 1;
    std::vector<double> values;

    Field() = default;
    Field(Grid g, std::size_t ch = 1);

    double& at(std::size_t point, std::size_t c = 0) { return values[point * channels + c]; }
    double at(std::size_t point, std::size_t c = 0) const { return values[point * channels + c]; }
    std::size_t size() const { return values.size(); }
};

/// Complex Fourier coefficients on the full spectrum of a Grid; same layout
/// as Field with the flat point index running over wavenumber tuples
/// (k mod N per axis, row-major).
struct SpectralField {
    Grid grid;
    std::size_t channels = 1;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    SpectralField(Grid g, std::size_t ch = 1);
};

/// Signed wavenumber of flat index i on an axis of length n: 0..n/2, then
/// negative. For even n the Nyquist index maps to -n/2.
long signed_wavenumber(std::size_t i, std::size_t n);

/// Unnormalized forward DFT over all axes (every axis must be periodic).
SpectralField dft_forward(const Field& f);

/// Inverse DFT carrying the 1/N factor; returns the real part (conjugate
/// symmetry is enforced by projection).
Field dft_inverse(const SpectralField& s);

/// Keep every s-th point per axis starting at index 0; extent is preserved.
Field subsample(const Field& f, std::size_t s);

/// sqrt(sum of squared differences) over all points and channels.
double l2_distance(const Field& a, const Field& b);

/// Mean of squared differences over all points and channels.
double mse(const Field& a, const Field& b);

double l2_norm(const Field& f);
double linf_norm(const Field& f);
double field_mean(const Field& f);         // over all points and channels
bool all_finite(const Field& f);

/// a += c*b (same grid and channels required).
void add_scaled(Field& a, const Field& b, double c);

/// Stack same-grid single-channel fields into one multi-channel field.
Field stack_fields(const std::vector<Field>& parts);

/// Extract channel c as a single-channel field.
Field extract_channel(const Field& f, std::size_t c);

} // namespace fnolab
