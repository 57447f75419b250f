#pragma once

#include "hcu/euler.hpp"

namespace hcu {

// Cell-centered source terms, 2-D only.
enum class SourceSpec { None, GravityPlusY };

// Unit gravitational acceleration along +y: S(U) = (0, 0, rho, rho v).
inline Cons2 gravity_source(const Cons2& u) { return Cons2{0.0, 0.0, u[0], u[2]}; }

}  // namespace hcu
