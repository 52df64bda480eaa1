#pragma once

#include <cstdint>

namespace hyperim {

using node_id = std::uint32_t;
using edge_id = std::uint32_t;

} // namespace hyperim
