#pragma once

#include <filesystem>

#include "fnolab/field.hpp"

namespace fnolab {

// NFF field file: magic "NFF1", u32 LE version=1, u8 ndim, u8 channels,
// u16 reserved=0, ndim x u64 LE axis length, ndim x f64 LE extent,
// row-major f64 LE payload. Periodicity is not encoded; read_field returns
// a grid that is periodic on every axis.

void write_field(const Field& f, const std::filesystem::path& path);
Field read_field(const std::filesystem::path& path);

} // namespace fnolab
