#pragma once

#include <vector>

#include "sfanc/geometry.hpp"

namespace sfanc {

// Complex pressure samples on a point set, tagged with which field they
// represent.
struct FieldMap {
    enum class Label { primary, secondary, total };

    std::vector<Vec2> points;
    std::vector<cplx> values;
    Label label = Label::total;
};

}  // namespace sfanc
