#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "forestlab/errors.hpp"
#include "forestlab/label.hpp"

namespace forestlab {

// Sequence of named fixed-width fields at the front of a label. Variable
// parts (rank codes, inner labels, padding) follow the fixed prefix and are
// handled by the schemes themselves.
class FieldLayout {
public:
    struct Field {
        std::string name;
        unsigned width;
    };

    FieldLayout() = default;
    FieldLayout(std::initializer_list<Field> fields) : fields_(fields) {}

    void add(std::string name, unsigned width) {
        fields_.push_back({std::move(name), width});
    }

    unsigned total_width() const {
        unsigned w = 0;
        for (const auto& f : fields_) w += f.width;
        return w;
    }

    std::size_t offset_of(std::string_view name) const {
        std::size_t off = 0;
        for (const auto& f : fields_) {
            if (f.name == name) return off;
            off += f.width;
        }
        throw OutOfRangeError("no such field: " + std::string(name));
    }

    std::uint64_t read(const Label& l, std::string_view name) const {
        std::size_t off = 0;
        for (const auto& f : fields_) {
            if (f.name == name) return l.read_uint(off, f.width);
            off += f.width;
        }
        throw OutOfRangeError("no such field: " + std::string(name));
    }

    const std::vector<Field>& fields() const { return fields_; }

private:
    std::vector<Field> fields_;
};

}  // namespace forestlab
