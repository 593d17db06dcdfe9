#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mskqc/errors.hpp"

namespace mskqc {

/// Grid dimensions, physical voxel spacing and patient left-right
/// orientation. Spacing is anisotropic (in-plane x/y plus slice interval z).
struct VolumeGeometry {
    std::array<int, 3> dims{1, 1, 1};
    std::array<double, 3> spacing_mm{1.0, 1.0, 1.0};
    int lr_axis = 0;                  // axis index of the patient left-right direction
    bool lr_positive_is_left = true;  // larger coordinate along lr_axis == patient left

    VolumeGeometry() = default;
    VolumeGeometry(std::array<int, 3> d, std::array<double, 3> s, int lr = 0, bool pos_left = true)
        : dims(d), spacing_mm(s), lr_axis(lr), lr_positive_is_left(pos_left) {
        validate();
    }

    void validate() const {
        for (int a = 0; a < 3; ++a) {
            if (dims[a] < 1) throw GeometryError("volume dims must be >= 1");
            if (!(spacing_mm[a] > 0.0)) throw GeometryError("voxel spacing must be > 0");
        }
        if (lr_axis < 0 || lr_axis > 2) throw GeometryError("lr_axis must be 0, 1 or 2");
    }

    std::size_t voxel_count() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }

    // row-major, x-fastest
    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(x) +
               static_cast<std::size_t>(dims[0]) * (static_cast<std::size_t>(y) +
                                                    static_cast<std::size_t>(dims[1]) * z);
    }

    std::array<int, 3> coords(std::size_t idx) const {
        const int x = static_cast<int>(idx % dims[0]);
        const int y = static_cast<int>((idx / dims[0]) % dims[1]);
        const int z = static_cast<int>(idx / (static_cast<std::size_t>(dims[0]) * dims[1]));
        return {x, y, z};
    }

    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && x < dims[0] && y >= 0 && y < dims[1] && z >= 0 && z < dims[2];
    }

    bool same_grid(const VolumeGeometry& o) const {
        return dims == o.dims && spacing_mm == o.spacing_mm && lr_axis == o.lr_axis &&
               lr_positive_is_left == o.lr_positive_is_left;
    }
};

/// Physical volume of one voxel in cubic centimeters.
inline double voxel_volume_cc(const VolumeGeometry& g) {
    return g.spacing_mm[0] * g.spacing_mm[1] * g.spacing_mm[2] / 1000.0;
}

/// Dense voxel grid over a VolumeGeometry, row-major x-fastest.
template <typename T>
struct VoxelGrid {
    VolumeGeometry geometry;
    std::vector<T> data;

    VoxelGrid() = default;
    explicit VoxelGrid(const VolumeGeometry& g, T fill = T{})
        : geometry(g), data(g.voxel_count(), fill) {}
    VoxelGrid(const VolumeGeometry& g, std::vector<T> d) : geometry(g), data(std::move(d)) {
        if (data.size() != g.voxel_count())
            throw GeometryError("grid data length does not match geometry dims");
    }

    std::size_t size() const { return data.size(); }
    T& at(int x, int y, int z) { return data[geometry.index(x, y, z)]; }
    const T& at(int x, int y, int z) const { return data[geometry.index(x, y, z)]; }
    T& operator[](std::size_t i) { return data[i]; }
    const T& operator[](std::size_t i) const { return data[i]; }
};

// HU kept as 32-bit signed in memory regardless of on-disk width.
using IntensityVolume = VoxelGrid<std::int32_t>;
// Structure codes; 0 = background.
using LabelVolume = VoxelGrid<std::uint16_t>;
// Single-structure occupancy. uint8 rather than bool: addressable, fast.
using BinaryMask = VoxelGrid<std::uint8_t>;
// Voxel-wise predictive uncertainty (variance of a [0,1] quantity, so <= 0.25).
using UncertaintyMap = VoxelGrid<double>;

inline std::size_t count_true(const BinaryMask& m) {
    std::size_t n = 0;
    for (auto v : m.data) n += (v != 0);
    return n;
}

/// Per-case metadata carried through reports.
struct CaseMeta {
    std::string case_id;
    std::optional<double> height_m;                        // subject height, meters
    std::optional<std::string> left_status, right_status;  // "affected"/"unaffected" tags

    void validate() const {
        if (height_m && !(*height_m > 0.0)) throw SpecError("height_m must be > 0");
    }
};

}  // namespace mskqc
