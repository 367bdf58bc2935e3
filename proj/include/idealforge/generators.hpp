#pragma once

#include "idealforge/circle_map.hpp"

namespace idealforge {

/// The standard generating set: A and B generate F (the stabilizer of 0),
/// and A, B, C generate T.
const CircleHomeo& gen_A();
const CircleHomeo& gen_B();
const CircleHomeo& gen_C();

/// Generators of T in a fixed order, for orbit exploration and random words.
const std::vector<CircleHomeo>& generators_T();

/// Generators of F.
const std::vector<CircleHomeo>& generators_F();

}  // namespace idealforge
