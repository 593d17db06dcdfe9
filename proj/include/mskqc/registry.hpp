#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mskqc/errors.hpp"
#include "mskqc/volume.hpp"

namespace mskqc {

enum class StructureGroup { hip_muscle, thigh_muscle, bone };

std::string to_string(StructureGroup g);
StructureGroup structure_group_from_string(const std::string& s);

struct StructureEntry {
    std::uint16_t code = 0;
    std::string name;
    StructureGroup group = StructureGroup::hip_muscle;
    bool sided = true;

    bool is_muscle() const { return group != StructureGroup::bone; }
};

/// Ordered inventory of the structures a label volume may contain.
/// The default registry is the 19-muscle + 3-bone hip-to-knee set; all
/// structures are sided except the sacrum.
class StructureRegistry {
public:
    StructureRegistry() = default;
    explicit StructureRegistry(std::vector<StructureEntry> entries);

    static StructureRegistry default_registry();
    static StructureRegistry load_json(const std::string& path);
    void save_json(const std::string& path) const;

    const std::vector<StructureEntry>& entries() const { return entries_; }
    bool has_code(std::uint16_t code) const;
    const StructureEntry& by_code(std::uint16_t code) const;
    const StructureEntry& by_name(const std::string& name) const;

private:
    std::vector<StructureEntry> entries_;
};

/// Mask of voxels whose label equals `code`. Geometry is propagated.
BinaryMask extract_mask(const LabelVolume& labels, std::uint16_t code,
                        const StructureRegistry& registry);

}  // namespace mskqc
