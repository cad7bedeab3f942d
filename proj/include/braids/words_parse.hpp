#ifndef BRAIDS_WORDS_PARSE_HPP
#define BRAIDS_WORDS_PARSE_HPP

#include <optional>
#include <string>

#include "braids/braid_word.hpp"
#include "braids/singular_braid.hpp"

namespace braids {

/// Word grammar: whitespace-separated tokens, token := kind INT ["^" SIGNED_INT],
/// kind in {s, t, d}; "S<i>" is sugar for "s<i>^-1".  Exponents on t/d must
/// be >= 1.  Strand count comes from the flag or is inferred as max index + 1.
/// ParseError carries the 1-based token position.
SingularWord parse_singular_word(const std::string& text, std::optional<int> n);

/// Same grammar restricted to s/S tokens.
BraidWord parse_braid_word(const std::string& text, std::optional<int> n);

}  // namespace braids

#endif
