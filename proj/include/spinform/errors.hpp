#pragma once

#include <stdexcept>
#include <string>

namespace spinform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched surfaces or vector/matrix sizes.
struct DimensionError : Error {
  using Error::Error;
};

// Feasibility guards (enumeration ranks, BFS genus, generator ranges).
struct GuardError : Error {
  using Error::Error;
};

// Malformed input files; message carries a field path.
struct SchemaError : Error {
  using Error::Error;
};

// Descriptor data contradicts itself (framing parities, fact clashes).
struct InconsistentDescriptorError : Error {
  using Error::Error;
};

// Homology assignment does not determine the form.
struct IncompleteBasisError : Error {
  using Error::Error;
};

// Hypotheses of the requested rule are not met by the input.
struct InapplicableError : Error {
  using Error::Error;
};

// A state the theory excludes was reached (e.g. Arf 1 on a torus in a
// homology sphere).
struct ContradictionError : Error {
  using Error::Error;
};

struct UndefinedArfError : Error {
  using Error::Error;
};

struct InvalidInputError : Error {
  using Error::Error;
};

struct UnknownCurveError : Error {
  using Error::Error;
};

// A rewrite move names a curve pair with no declared relation.
struct UnverifiableMoveError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

}  // namespace spinform
