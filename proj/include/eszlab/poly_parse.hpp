#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eszlab/errors.hpp"
#include "eszlab/mpoly.hpp"

namespace eszlab {

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : InputError(msg + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses a polynomial expression.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*' power) | ('/' power))*       division by constants only
//   power  := atom ['^' integer]
//   atom   := number | variable | 'i' | '(' expr ')'
//   number := digits ['/' digits] ['i']
//
// Variable names match [a-zA-Z][a-zA-Z0-9_']*. A bare 'i' is the imaginary
// unit unless 'i' is one of the declared variables. When vars is empty the
// variables are taken in order of first appearance.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars = {});

} // namespace eszlab
