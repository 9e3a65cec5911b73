#pragma once

#include <stdexcept>
#include <string>

namespace impsplit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  int line;
  SyntaxError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct EmptyPremiseError : Error {
  int line;
  explicit EmptyPremiseError(int line_no)
      : Error("line " + std::to_string(line_no) + ": implication with empty premise"),
        line(line_no) {}
};

struct ElementOutOfGround : Error {
  using Error::Error;
};

struct GroundMismatch : Error {
  using Error::Error;
};

struct BadBipartition : Error {
  using Error::Error;
};

/// Thrown by bipartite_part when a premise straddles both sides.
struct NotASplitError : Error {
  std::string violation;
  explicit NotASplitError(std::string imp_text)
      : Error("bipartition is not a split, violated by: " + imp_text),
        violation(std::move(imp_text)) {}
};

struct NotClosed : Error {
  using Error::Error;
};

struct GroundOverlap : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct InconsistentInput : Error {
  using Error::Error;
};

struct InfeasibleSpec : Error {
  using Error::Error;
};

}  // namespace impsplit
