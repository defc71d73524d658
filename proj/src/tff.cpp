#include "topoforms/tff.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "TFF1 i/o assumes a little-endian host");

namespace topoforms {

using nlohmann::json;

void write_tff(const std::string& path, const TffField& field) {
    const std::size_t ns = field.grid.num_sites();
    if (field.data.size() != ns * static_cast<std::size_t>(field.components))
        throw std::invalid_argument("write_tff: data size != components * sites");

    json header;
    header["magic"] = "TFF1";
    header["dim"] = field.grid.dim;
    header["shape"] = std::vector<int>(field.grid.shape.begin(), field.grid.shape.begin() + field.grid.dim);
    header["spacing"] = std::vector<double>(field.grid.spacing.begin(), field.grid.spacing.begin() + field.grid.dim);
    header["boundary"] = to_string(field.grid.boundary);
    header["components"] = field.components;
    header["dtype"] = "f64-le";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_tff: cannot open " + path);
    out << header.dump() << '\n';
    out.write(reinterpret_cast<const char*>(field.data.data()),
              static_cast<std::streamsize>(field.data.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_tff: short write to " + path);
}

TffField read_tff(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_tff: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_tff: missing header line");
    json header = json::parse(line);
    if (header.value("magic", "") != std::string("TFF1"))
        throw std::runtime_error("read_tff: bad magic, not a TFF1 file");
    if (header.value("dtype", "") != std::string("f64-le"))
        throw std::runtime_error("read_tff: unsupported dtype");

    const int dim = header.at("dim").get<int>();
    if (dim < 1 || dim > 4) throw std::runtime_error("read_tff: dim out of range");
    std::array<int, 4> shape{};
    std::array<double, 4> spacing{};
    const auto js = header.at("shape");
    const auto jh = header.at("spacing");
    if (static_cast<int>(js.size()) != dim || static_cast<int>(jh.size()) != dim)
        throw std::runtime_error("read_tff: shape/spacing length != dim");
    for (int k = 0; k < dim; ++k) {
        shape[k] = js[k].get<int>();
        spacing[k] = jh[k].get<double>();
    }

    TffField field;
    field.grid = GridSpec(dim, shape, spacing, boundary_from_string(header.at("boundary").get<std::string>()));
    field.components = header.at("components").get<int>();
    if (field.components < 1) throw std::runtime_error("read_tff: components < 1");

    const std::size_t count = field.grid.num_sites() * static_cast<std::size_t>(field.components);
    field.data.resize(count);
    in.read(reinterpret_cast<char*>(field.data.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(count * sizeof(double)))
        throw std::runtime_error("read_tff: truncated payload");
    return field;
}

TffField to_tff(const ScalarField& f) {
    TffField t;
    t.grid = f.grid;
    t.components = 1;
    t.data = f.values;
    return t;
}

TffField to_tff(const VectorField& f) {
    TffField t;
    t.grid = f.grid;
    t.components = f.grid.dim;
    t.data = f.data;
    return t;
}

ScalarField scalar_from_tff(const TffField& f) {
    if (f.components != 1) throw std::invalid_argument("scalar_from_tff: components != 1");
    return ScalarField(f.grid, f.data);
}

VectorField vector_from_tff(const TffField& f) {
    if (f.components != f.grid.dim)
        throw std::invalid_argument("vector_from_tff: components != grid dim");
    VectorField v(f.grid);
    v.data = f.data;
    return v;
}

} // namespace topoforms
