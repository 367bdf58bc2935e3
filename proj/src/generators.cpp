#include "idealforge/generators.hpp"

namespace idealforge {

namespace {

Dyadic d(long long num, int exp) { return Dyadic(BigInt(num), exp); }

}  // namespace

const CircleHomeo& gen_A() {
    static const CircleHomeo a =
        CircleHomeo::make({{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 2)}, {d(3, 2), d(1, 1)}, {d(1, 0), d(1, 0)}});
    return a;
}

const CircleHomeo& gen_B() {
    static const CircleHomeo b = CircleHomeo::make(
        {{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 1)}, {d(3, 2), d(5, 3)}, {d(7, 3), d(3, 2)}, {d(1, 0), d(1, 0)}});
    return b;
}

const CircleHomeo& gen_C() {
    static const CircleHomeo c =
        CircleHomeo::make({{d(0, 0), d(3, 2)}, {d(1, 1), d(1, 0)}, {d(3, 2), d(3, 1)}, {d(1, 0), d(7, 2)}});
    return c;
}

const std::vector<CircleHomeo>& generators_T() {
    static const std::vector<CircleHomeo> g = {gen_A(), gen_B(), gen_C()};
    return g;
}

const std::vector<CircleHomeo>& generators_F() {
    static const std::vector<CircleHomeo> g = {gen_A(), gen_B()};
    return g;
}

}  // namespace idealforge
