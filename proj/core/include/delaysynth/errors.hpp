#pragma once

#include <stdexcept>
#include <string>

namespace ds {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Synchronized lasso alignment graph grew past the configured bound.
struct AlignmentOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VertexBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoTransformation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// choose_output precondition violated; indicates an internal soundness bug.
struct NoWitness : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotWinning : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotBoundedStrategy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PeriodNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ds
