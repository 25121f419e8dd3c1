#pragma once

#include <stdexcept>
#include <string>

namespace fcadi {

// Malformed caller input: unknown labels, broken files, violated preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered set was handed in where a lattice was required.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fcadi
