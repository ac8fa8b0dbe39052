#pragma once

#include <stdexcept>
#include <string>

namespace chainrot {

// Why a tree failed structural validation. Each kind is reported separately
// so callers can tell a mislabeled tree from a broken one.
enum class TreeErrorKind {
    InvalidVertex,   // label or child reference outside 1..n, or bad root
    DuplicateChild,  // some vertex is the child of more than one slot
    Cycle,           // a child pointer closes a loop
    Forest,          // vertices unreachable from the root (multiple roots)
    InfixViolation,  // in-order traversal does not visit 1..n in order
};

class TreeError : public std::runtime_error {
public:
    TreeError(TreeErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    TreeErrorKind kind() const { return kind_; }

private:
    TreeErrorKind kind_;
};

// Why a move was rejected by apply().
enum class MoveErrorKind {
    BadVertex,    // a vertex of the descriptor is outside 1..n
    BrokenChain,  // [top-bottom] is not a chain of the stated side
    WrongPivot,   // the pivot relation required by the move kind fails
};

class IllegalMove : public std::runtime_error {
public:
    IllegalMove(MoveErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    MoveErrorKind kind() const { return kind_; }

private:
    MoveErrorKind kind_;
};

// Malformed textual input (tree literal, shape bitstring, move, script, JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A size cap on the exhaustive search was exceeded. The message states the
// Catalan number so the caller understands the cost of raising the cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainrot
