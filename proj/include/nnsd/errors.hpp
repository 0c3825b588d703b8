#pragma once

#include <stdexcept>

namespace nnsd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input: bad parameters, malformed files, violated preconditions.
struct BadInput : Error {
  using Error::Error;
};

// The instance has no feasible solution (e.g. tuple domination with delta < k-1).
struct Infeasible : Error {
  using Error::Error;
};

// A solver or generator hit its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct IndexOutOfRange : BadInput { using BadInput::BadInput; };
struct SelfLoop : BadInput { using BadInput::BadInput; };
struct BadParams : BadInput { using BadInput::BadInput; };
struct SizeMismatch : BadInput { using BadInput::BadInput; };

struct MalformedHeader : BadInput { using BadInput::BadInput; };
struct TruncatedBitStream : BadInput { using BadInput::BadInput; };
struct NonCanonicalPadding : BadInput { using BadInput::BadInput; };
struct TooLarge : BadInput { using BadInput::BadInput; };
struct BadHeader : BadInput { using BadInput::BadInput; };
struct EdgeCountMismatch : BadInput { using BadInput::BadInput; };

struct NotATree : BadInput { using BadInput::BadInput; };
struct NotRegular : BadInput { using BadInput::BadInput; };
struct NotCubic : BadInput { using BadInput::BadInput; };
struct NotCliqueFree : BadInput { using BadInput::BadInput; };
struct TooSmall : BadInput { using BadInput::BadInput; };

struct RetriesExhausted : CapExceeded { using CapExceeded::CapExceeded; };

}  // namespace nnsd
