#pragma once

#include <stdexcept>
#include <string>

namespace starhess {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingAssignment : Error {
  int index;
  explicit MissingAssignment(int i)
      : Error("no value assigned to indeterminate a" + std::to_string(i)), index(i) {}
};

struct InsufficientAlpha : Error {
  long needed;
  explicit InsufficientAlpha(long n)
      : Error("explicit alpha list too short, need at least " + std::to_string(n) + " values"),
        needed(n) {}
};

struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& what) : Error(what) {}
};

struct NotMonic : Error {
  int index;
  explicit NotMonic(int n)
      : Error("polynomial at position " + std::to_string(n) + " is not monic of matching degree"),
        index(n) {}
};

struct SymmetryViolation : Error {
  int n, m;
  SymmetryViolation(int n_, int m_)
      : Error("coefficient of x^" + std::to_string(m_) + " in P_" + std::to_string(n_) +
              " breaks the fold symmetry"),
        n(n_), m(m_) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct NotSquarefree : Error {
  NotSquarefree() : Error("polynomial has a repeated root") {}
};

struct RootsNotAllPositive : Error {
  int count;
  explicit RootsNotAllPositive(int c)
      : Error("only " + std::to_string(c) + " simple roots on (0, inf)"), count(c) {}
};

struct CannotSeparate : Error {
  CannotSeparate() : Error("root boxes could not be ordered above the refinement floor") {}
};

struct InsufficientMoments : Error {
  int needed;
  explicit InsufficientMoments(int n)
      : Error("functional carries too few moments, need degree " + std::to_string(n)), needed(n) {}
};

struct GammaHeightExceeded : Error {
  int height;
  explicit GammaHeightExceeded(int h)
      : Error("gamma weight requested beyond the supplied height bound at height " +
              std::to_string(h)),
        height(h) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace starhess
