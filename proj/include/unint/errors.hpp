#pragma once

#include <stdexcept>
#include <string>

namespace unint {

/// Two permutations (or a permutation and a sequence) of different degree.
struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A signature and a class label of different weight.
struct WeightMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds the configured enumeration budget.
struct DegreeTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Evaluation of a rational function at a root of its denominator.
struct PoleAtValue : std::domain_error {
    using std::domain_error::domain_error;
};

/// A matrix index label outside 1..n.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A closed double-fan whose line counts admit no opened graph.
struct InvalidClosedGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Grammar error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace unint
