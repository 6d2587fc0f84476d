#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace perfcode {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction or enumeration would exceed a configured size cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A generator is malformed: non-permutation images, a singular matrix,
// or a modulus that is not prime.
struct InvalidGenerator : Error {
  using Error::Error;
};

// quotient() was asked to factor by a subgroup that is not normal.
struct NotNormal : Error {
  using Error::Error;
};

// A supplied representative list misses a coset or doubles one up.
struct NotATransversal : Error {
  using Error::Error;
};

// A supplied transversal is not closed under inversion.
struct NotInverseClosed : Error {
  using Error::Error;
};

// Family parameters outside the documented domain.
struct InvalidParams : Error {
  using Error::Error;
};

// An action descriptor that does not define a homomorphism into Aut(N).
struct InvalidAction : Error {
  using Error::Error;
};

// A scan bound below the documented minimum.
struct InvalidRange : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a library bug.
struct InternalError : Error {
  using Error::Error;
};

// Group-spec text that does not match the grammar; position is a byte
// offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Size caps shared across the library.  group_order bounds table
// construction, lattice_order bounds full subgroup enumeration, and
// transversal_index bounds the inverse-closed transversal search.
struct Caps {
  std::uint32_t group_order = 20000;
  std::uint32_t lattice_order = 2000;
  std::uint32_t transversal_index = 512;
};

}  // namespace perfcode
