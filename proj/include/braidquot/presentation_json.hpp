#ifndef BRAIDQUOT_PRESENTATION_JSON_HPP
#define BRAIDQUOT_PRESENTATION_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "braidquot/presentation.hpp"

namespace braidquot {

class JsonFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// {"label":...,"generators":[...],"relators":[[...],...]} on one line, keys in
// that order.
std::string to_json(Presentation const &p);

// Throws JsonFormatError for malformed documents or schema violations.
Presentation presentation_from_json(std::string_view text);

} // namespace braidquot

#endif // BRAIDQUOT_PRESENTATION_JSON_HPP
