#pragma once

#include <string>
#include <string_view>

#include "gr1core/ast.hpp"

namespace gr1core {

/// Parses a specification in the `.spc` surface syntax:
///
///   env|sys (boolean | Int(lo..hi)) name;
///   asm|gar [ini|alw|alwEv] expr;          // kind defaults to ini
///   monitor boolean name { ini expr; alw expr; ... }
///   gar respondsTo(trigger, response);
///   // line comment
///
/// `next(v)` is the only priming syntax. Element IDs are assigned in source
/// order. Rejects ill-typed expressions, misplaced primes, duplicate
/// variable names and empty input with a positioned ParseError.
SpecAst parse_spec(std::string_view text);

}  // namespace gr1core
