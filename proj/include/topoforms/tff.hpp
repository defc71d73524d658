#pragma once

#include <string>
#include <vector>

#include "topoforms/field.hpp"
#include "topoforms/grid.hpp"

namespace topoforms {

/// In-memory image of a "TFF1" field file: one single-line JSON header
/// {magic, dim, shape, spacing, boundary, components, dtype:"f64-le"}
/// followed by raw little-endian doubles, component-major then row-major
/// sites. Round-trips bit-exactly.
struct TffField {
    GridSpec grid;
    int components = 1;
    std::vector<double> data; // components * num_sites

    std::span<const double> component(int c) const {
        return {data.data() + static_cast<std::size_t>(c) * grid.num_sites(), grid.num_sites()};
    }
    std::span<double> component(int c) {
        return {data.data() + static_cast<std::size_t>(c) * grid.num_sites(), grid.num_sites()};
    }
};

void write_tff(const std::string& path, const TffField& field);
TffField read_tff(const std::string& path);

TffField to_tff(const ScalarField& f);
TffField to_tff(const VectorField& f);
ScalarField scalar_from_tff(const TffField& f);
VectorField vector_from_tff(const TffField& f);

} // namespace topoforms
